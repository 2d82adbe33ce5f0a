use std::collections::{HashSet, VecDeque};

use super::{AffinePerm, FinitePerm, ParabolicData};

/// Bruhat order on the extended affine symmetric group. Elements of
/// different degree are incomparable.
pub fn bruhat_leq(f: &AffinePerm, g: &AffinePerm) -> bool {
    if f.n() != g.n() || f.degree() != g.degree() {
        return false;
    }
    let mut f = f.clone();
    let mut g = g.clone();
    let mut lf = f.length();
    let mut lg = g.length();
    loop {
        if lf > lg {
            return false;
        }
        if lg == 0 {
            return f == g;
        }
        let i = g.left_descents()[0];
        if f.is_left_descent(i) {
            f = f.left_mul_simple(i);
            lf -= 1;
        }
        g = g.left_mul_simple(i);
        lg -= 1;
    }
}

/// Bruhat order by breadth-first search over covers `f → f t` with `t` an
/// affine reflection and `ℓ(f t) = ℓ(f) + 1`.
pub fn bruhat_leq_by_covers(f: &AffinePerm, g: &AffinePerm) -> bool {
    if f.n() != g.n() || f.degree() != g.degree() {
        return false;
    }
    let n = f.n() as i64;
    let target = g.length();
    let mut seen: HashSet<AffinePerm> = HashSet::new();
    let mut queue = VecDeque::from([f.clone()]);
    seen.insert(f.clone());
    while let Some(h) = queue.pop_front() {
        if &h == g {
            return true;
        }
        let lh = h.length();
        if lh >= target {
            continue;
        }
        // ℓ(t_{a,b}) <= 2ℓ(g) + 1 bounds the span of useful reflections.
        let reach = n * (target as i64 + 2);
        for a in 1..=n {
            for b in a + 1..=a + reach {
                if (b - a) % n == 0 {
                    continue;
                }
                let next = h.mul_reflection(a, b);
                if next.length() == lh + 1 && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtAlgorithm {
    /// Transitive closure of the single-reflection relations.
    CoverBfs,
    /// Reduce `w` to its minimal coset representative and compare in Bruhat order.
    CosetReduce,
    /// Compare `u t_λ w^{-1}` with the translations `t_μ`, `μ ∈ Wλ`.
    Affine,
}

/// The extended parabolic Bruhat order `u ≤_P w`.
pub fn ext_p_bruhat(u: &FinitePerm, w: &FinitePerm, p: &ParabolicData, alg: ExtAlgorithm) -> bool {
    match alg {
        ExtAlgorithm::CoverBfs => {
            let pairs = p.non_parabolic_pairs();
            let mut seen: HashSet<FinitePerm> = HashSet::from([u.clone()]);
            let mut queue = VecDeque::from([u.clone()]);
            while let Some(x) = queue.pop_front() {
                if &x == w {
                    return true;
                }
                for &(a, b) in &pairs {
                    if x.apply(a) < x.apply(b) {
                        let y = x.swap_positions(a, b);
                        if seen.insert(y.clone()) {
                            queue.push_back(y);
                        }
                    }
                }
            }
            false
        }
        ExtAlgorithm::CosetReduce => {
            let (wv, v) = p.min_rep(w);
            u.compose(&v).bruhat_leq(&wv)
        }
        ExtAlgorithm::Affine => {
            let f = AffinePerm::from_uw(u, w, p.lambda()).expect("same n");
            p.orbit()
                .iter()
                .any(|mu| bruhat_leq(&f, &AffinePerm::translation(mu)))
        }
    }
}

/// `u(a) <= w(a)` for `a <= k` and `u(b) >= w(b)` for `b > k`.
pub fn k_bruhat(u: &FinitePerm, w: &FinitePerm, k: usize) -> bool {
    (1..=u.n()).all(|a| {
        if a <= k {
            u.apply(a) <= w.apply(a)
        } else {
            u.apply(a) >= w.apply(a)
        }
    })
}

/// The maximal parabolic `⟨s_i : i ≠ k⟩`.
pub fn k_parabolic(n: usize, k: usize) -> ParabolicData {
    ParabolicData::from_simple_set(n, (1..n).filter(|&i| i != k)).expect("1 <= k < n")
}
