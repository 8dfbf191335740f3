//! The weight lattice side: the index set `Gamma(m)`, dominance order,
//! simple-root shifts `mu +- alpha_(i,k)`, and the rank embedding `gamma`
//! on weights.

use super::partition::MultiComposition;
use super::CombiError;

/// The index set `Gamma(m) = {(i,k) | 1 <= i <= m_k, 1 <= k <= r}`,
/// identified with `{1..m}` by `(i,k) -> m_1 + ... + m_{k-1} + i`.
/// `Gamma'(m)` drops the final index `(m_r, r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaIndex {
    m: Vec<usize>,
}

impl GammaIndex {
    pub fn new(m: &[usize]) -> Self {
        assert!(!m.is_empty() && m.iter().all(|&x| x >= 1), "bad bounds {m:?}");
        GammaIndex { m: m.to_vec() }
    }

    pub fn bounds(&self) -> &[usize] {
        &self.m
    }

    pub fn rank(&self) -> usize {
        self.m.iter().sum()
    }

    pub fn num_components(&self) -> usize {
        self.m.len()
    }

    /// 0-based linear position of `(i,k)`.
    pub fn linear(&self, i: usize, k: usize) -> usize {
        debug_assert!(k >= 1 && k <= self.m.len() && i >= 1 && i <= self.m[k - 1]);
        self.m[..k - 1].iter().sum::<usize>() + i - 1
    }

    /// Inverse of `linear`.
    pub fn pair(&self, mut pos: usize) -> (usize, usize) {
        for (k, &mk) in self.m.iter().enumerate() {
            if pos < mk {
                return (pos + 1, k + 1);
            }
            pos -= mk;
        }
        panic!("linear index out of range");
    }

    /// All `(i,k)` in linear order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rank()).map(|p| self.pair(p))
    }

    /// All `(i,k)` except the last one `(m_r, r)`.
    pub fn iter_prime(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rank() - 1).map(|p| self.pair(p))
    }

    pub fn contains(&self, i: usize, k: usize) -> bool {
        k >= 1 && k <= self.m.len() && i >= 1 && i <= self.m[k - 1]
    }

    pub fn contains_prime(&self, i: usize, k: usize) -> bool {
        self.contains(i, k) && self.linear(i, k) + 1 < self.rank()
    }

    /// The successor of `(i,k)` under the convention `(m_k + 1, k) = (1, k+1)`.
    pub fn successor(&self, i: usize, k: usize) -> (usize, usize) {
        assert!(self.contains_prime(i, k), "({i},{k}) has no successor");
        if i < self.m[k - 1] {
            (i + 1, k)
        } else {
            (1, k + 1)
        }
    }

    /// The entry of `mu` at coordinate `(i,k)` with the same wrap-around
    /// convention: position `(m_k + 1, k)` reads `mu_1^{(k+1)}`.
    pub fn entry_after(&self, mu: &MultiComposition, i: usize, k: usize) -> usize {
        let (si, sk) = self.successor(i, k);
        mu.part(si, sk)
    }
}

/// An integer vector indexed by `Gamma(m)`: the ambient weight lattice in
/// which compositions, their differences, and root shifts live.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    coords: Vec<i64>,
}

impl WeightVector {
    pub fn from_composition(mu: &MultiComposition, gamma: &GammaIndex) -> Self {
        assert_eq!(mu.num_components(), gamma.num_components());
        let mut coords = Vec::with_capacity(gamma.rank());
        for (i, k) in gamma.iter() {
            coords.push(mu.part(i, k) as i64);
        }
        WeightVector { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn sub(&self, other: &WeightVector) -> WeightVector {
        assert_eq!(self.coords.len(), other.coords.len());
        WeightVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Membership in the positive root cone: all prefix sums non-negative
    /// and total zero.
    pub fn in_positive_root_cone(&self) -> bool {
        let mut acc = 0i64;
        for &c in &self.coords {
            acc += c;
            if acc < 0 {
                return false;
            }
        }
        acc == 0
    }
}

/// Dominance order: `la >= mu` iff `la - mu` is a non-negative sum of simple
/// roots, i.e. every prefix sum of the concatenated entries of `la` weakly
/// exceeds the corresponding prefix of `mu`, with equal totals. Comparisons
/// are only defined within one bound vector `m`.
pub fn dominance_ge(
    la: &MultiComposition,
    mu: &MultiComposition,
    m: &[usize],
) -> Result<bool, CombiError> {
    if la.size() != mu.size() {
        return Err(CombiError::SizeMismatch(la.size(), mu.size()));
    }
    if la.num_components() != mu.num_components() {
        return Err(CombiError::ComponentMismatch(
            la.num_components(),
            mu.num_components(),
        ));
    }
    if !la.fits(m) || !mu.fits(m) {
        return Err(CombiError::BoundsViolation(m.to_vec()));
    }
    let gamma = GammaIndex::new(m);
    let a = WeightVector::from_composition(la, &gamma);
    let b = WeightVector::from_composition(mu, &gamma);
    Ok(a.sub(&b).in_positive_root_cone())
}

/// `mu + alpha_(i,k)` inside `Lambda_{n,r}(m)`, or `None` when the result
/// leaves the weight set.
pub fn add_alpha(
    mu: &MultiComposition,
    i: usize,
    k: usize,
    gamma: &GammaIndex,
) -> Option<MultiComposition> {
    let (si, sk) = gamma.successor(i, k);
    let lowered = mu.part(si, sk);
    if lowered == 0 {
        return None;
    }
    let mut out = mu.clone();
    out.set_part(i, k, mu.part(i, k) + 1);
    out.set_part(si, sk, lowered - 1);
    Some(out)
}

/// `mu - alpha_(i,k)` inside `Lambda_{n,r}(m)`, or `None`.
pub fn sub_alpha(
    mu: &MultiComposition,
    i: usize,
    k: usize,
    gamma: &GammaIndex,
) -> Option<MultiComposition> {
    let raised = mu.part(i, k);
    if raised == 0 {
        return None;
    }
    let (si, sk) = gamma.successor(i, k);
    let mut out = mu.clone();
    out.set_part(i, k, raised - 1);
    out.set_part(si, sk, mu.part(si, sk) + 1);
    Some(out)
}

/// The rank embedding on weights: append a final entry 1 to component `r`
/// at row `m_r`, mapping `Lambda_{n,r}(m')` into `Lambda_{n+1,r}(m)` where
/// `m' = (m_1, ..., m_r - 1)`.
pub fn gamma(la: &MultiComposition, m: &[usize]) -> MultiComposition {
    let r = la.num_components();
    assert_eq!(m.len(), r);
    let m_r = m[r - 1];
    assert!(
        la.rows(r) <= m_r - 1,
        "component {r} of {la} exceeds the source bound {}",
        m_r - 1
    );
    let mut comps = la.components().to_vec();
    comps[r - 1].resize(m_r - 1, 0);
    comps[r - 1].push(1);
    MultiComposition::new(comps)
}

/// Inverse of [`gamma`]; rejects weights whose final entry is not 1.
pub fn gamma_inv(mu: &MultiComposition, m: &[usize]) -> Result<MultiComposition, CombiError> {
    if !is_in_gamma_image(mu, m) {
        return Err(CombiError::NotInGammaImage);
    }
    let r = mu.num_components();
    let mut comps = mu.components().to_vec();
    comps[r - 1].pop();
    Ok(MultiComposition::new(comps))
}

/// Tests `mu_{m_r}^{(r)} = 1`, the characterization of the image of gamma.
pub fn is_in_gamma_image(mu: &MultiComposition, m: &[usize]) -> bool {
    let r = mu.num_components();
    r == m.len() && mu.fits(m) && mu.rows(r) == m[r - 1] && mu.part(m[r - 1], r) == 1
}

/// The weight `omega_n = (empty, ..., empty, (1,...,1))` with `n` ones in
/// the last component.
pub fn omega(n: usize, r: usize) -> MultiComposition {
    let mut comps = vec![Vec::new(); r];
    comps[r - 1] = vec![1; n];
    MultiComposition::new(comps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mc(s: &str) -> MultiComposition {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_index_layout() {
        let g = GammaIndex::new(&[3, 3]);
        assert_eq!(g.rank(), 6);
        assert_eq!(g.linear(1, 1), 0);
        assert_eq!(g.linear(1, 2), 3);
        assert_eq!(g.pair(4), (2, 2));
        assert_eq!(g.iter_prime().count(), 5);
        assert_eq!(g.successor(3, 1), (1, 2));
        assert_eq!(g.successor(2, 2), (3, 2));
        assert!(g.contains_prime(3, 1));
        assert!(!g.contains_prime(3, 2));
    }

    #[test]
    fn dominance_examples() {
        // ((2),0) vs ((1,1),0) with m = (2,1): prefixes 2>=1, 2>=2, 2>=2
        assert!(dominance_ge(&mc("[[2],[]]"), &mc("[[1,1],[]]"), &[2, 1]).unwrap());
        let la = mc("[[1],[1]]");
        assert!(dominance_ge(&la, &la, &[2, 1]).unwrap());
        assert!(!dominance_ge(&mc("[[1],[1]]"), &mc("[[2],[]]"), &[2, 1]).unwrap());
        assert!(dominance_ge(&mc("[[2],[]]"), &mc("[[1],[1]]"), &[2, 1]).unwrap());
        assert_eq!(
            dominance_ge(&mc("[[2],[]]"), &mc("[[1],[1],[1]]"), &[2, 1]),
            Err(CombiError::SizeMismatch(2, 3))
        );
    }

    #[test]
    fn alpha_shifts() {
        let g = GammaIndex::new(&[2, 2]);
        let mu = mc("[[1,1],[]]");
        // alpha_(2,1) moves a unit from slot (1,2) to slot (2,1)
        assert_eq!(add_alpha(&mu, 2, 1, &g), None); // mu_1^{(2)} = 0
        let nu = add_alpha(&mu, 1, 1, &g).unwrap();
        assert_eq!(nu, mc("[[2,0],[]]"));
        assert_eq!(sub_alpha(&nu, 1, 1, &g).unwrap(), mu);
        assert_eq!(sub_alpha(&mc("[[],[]]"), 1, 1, &g), None);
    }

    #[test]
    fn gamma_embedding_examples() {
        let m = [2, 2];
        let la = mc("[[1],[1]]");
        let img = gamma(&la, &m);
        assert_eq!(img, mc("[[1],[1,1]]"));
        assert!(is_in_gamma_image(&img, &m));
        assert_eq!(gamma_inv(&img, &m).unwrap(), la);
        assert!(!is_in_gamma_image(&mc("[[2],[2]]"), &m));
        assert_eq!(
            gamma_inv(&mc("[[2],[2]]"), &m),
            Err(CombiError::NotInGammaImage)
        );
        // a middle zero survives the round trip
        let mu = mc("[[],[]]");
        assert_eq!(gamma(&mu, &m), mc("[[],[0,1]]"));
        assert_eq!(gamma_inv(&gamma(&mu, &m), &m).unwrap(), mu);
    }

    #[test]
    fn omega_weight() {
        assert_eq!(omega(3, 2), mc("[[],[1,1,1]]"));
        assert_eq!(omega(0, 2), mc("[[],[]]"));
        assert_eq!(omega(2, 1), mc("[[1,1]]"));
    }
}
