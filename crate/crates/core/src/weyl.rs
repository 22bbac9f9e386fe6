//! The group `W(Theta)` of block-size-preserving permutations of `{1..k}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::weights::{BlockWeight, Composition};

/// Default bound on orbit enumeration.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// An element of `W(Theta)`, stored as the induced permutation of blocks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ThetaWeylElement {
    composition: Composition,
    /// `image[i]` is the 0-based image of block `i + 1`.
    image: Vec<usize>,
}

impl ThetaWeylElement {
    pub fn identity(composition: Composition) -> Self {
        let image = (0..composition.k()).collect();
        ThetaWeylElement { composition, image }
    }

    /// Builds an element from its 1-based image list.
    pub fn new(composition: Composition, images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::NotInWeylGroup);
        }
        Self::from_images(composition, images.iter().map(|i| i - 1).collect())
    }

    pub(crate) fn from_images(composition: Composition, image: Vec<usize>) -> Result<Self> {
        let k = composition.k();
        if image.len() != k {
            return Err(Error::LengthMismatch {
                expected: k,
                got: image.len(),
            });
        }
        let mut seen = vec![false; k];
        for (i, &t) in image.iter().enumerate() {
            if t >= k || seen[t] || composition.parts()[t] != composition.parts()[i] {
                return Err(Error::NotInWeylGroup);
            }
            seen[t] = true;
        }
        Ok(ThetaWeylElement { composition, image })
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    /// 1-based image of block `i` (1-based).
    pub fn image_of(&self, i: usize) -> usize {
        self.image[i - 1] + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.image.iter().map(|i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &t)| i == t)
    }

    fn require_same_composition(&self, c: &Composition) -> Result<()> {
        if &self.composition == c {
            Ok(())
        } else {
            Err(Error::CompositionMismatch)
        }
    }
}

impl fmt::Debug for ThetaWeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ThetaWeylElement{:?}", self.images())
    }
}

/// The element swapping blocks `p < q` of equal size.
pub fn sigma_pq(c: &Composition, p: usize, q: usize) -> Result<ThetaWeylElement> {
    c.check_index(p)?;
    c.check_index(q)?;
    if p >= q {
        return Err(Error::IndexOrder { p, q });
    }
    let (size_p, size_q) = (c.size_of(p), c.size_of(q));
    if size_p != size_q {
        return Err(Error::BlockSizeMismatch {
            p,
            q,
            size_p,
            size_q,
        });
    }
    let mut image: Vec<usize> = (0..c.k()).collect();
    image.swap(p - 1, q - 1);
    Ok(ThetaWeylElement {
        composition: c.clone(),
        image,
    })
}

/// `w[l_1, ..., l_k] = [l_{w^-1(1)}, ..., l_{w^-1(k)}]`.
pub fn apply(w: &ThetaWeylElement, v: &BlockWeight) -> Result<BlockWeight> {
    w.require_same_composition(v.composition())?;
    let mut out = vec![0i64; v.k()];
    for (i, &t) in w.image.iter().enumerate() {
        out[t] = v.entries()[i];
    }
    Ok(v.with_entries(out))
}

/// `apply(compose(a, b), v) == apply(a, apply(b, v))`.
pub fn compose(a: &ThetaWeylElement, b: &ThetaWeylElement) -> Result<ThetaWeylElement> {
    a.require_same_composition(&b.composition)?;
    Ok(ThetaWeylElement {
        composition: a.composition.clone(),
        image: b.image.iter().map(|&t| a.image[t]).collect(),
    })
}

pub fn inverse(a: &ThetaWeylElement) -> ThetaWeylElement {
    let mut image = vec![0usize; a.image.len()];
    for (i, &t) in a.image.iter().enumerate() {
        image[t] = i;
    }
    ThetaWeylElement {
        composition: a.composition.clone(),
        image,
    }
}

/// Number of distinct elements in the orbit of `l`: the product over classes
/// of multinomial coefficients. Saturates at `u128::MAX`.
pub fn orbit_size(l: &BlockWeight) -> u128 {
    let mut total: u128 = 1;
    for class in l.composition().classes() {
        let mut values: Vec<i64> = class.positions.iter().map(|&j| l.entry(j)).collect();
        values.sort_unstable();
        // multinomial as a running product of binomials
        let mut placed: u128 = 0;
        let mut run: u128 = 0;
        for (i, v) in values.iter().enumerate() {
            run = if i > 0 && values[i - 1] == *v {
                run + 1
            } else {
                1
            };
            placed += 1;
            // multiply by placed / run, exact at each step
            total = match total.checked_mul(placed) {
                Some(t) => t / run,
                None => return u128::MAX,
            };
        }
    }
    total
}

/// Rearranges `xs` into the next lexicographic permutation; false when `xs`
/// is already the last one.
fn next_permutation(xs: &mut [i64]) -> bool {
    if xs.len() < 2 {
        return false;
    }
    let mut i = xs.len() - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = xs.len() - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// All distinct `w * l`, sorted lexicographically by entries.
pub fn enumerate_orbit(l: &BlockWeight, cap: usize) -> Result<Vec<BlockWeight>> {
    let size = orbit_size(l);
    if size > cap as u128 {
        return Err(Error::OrbitTooLarge { size, cap });
    }
    let comp = l.composition();
    let per_class: Vec<Vec<Vec<i64>>> = comp
        .classes()
        .iter()
        .map(|class| {
            let mut values: Vec<i64> = class.positions.iter().map(|&j| l.entry(j)).collect();
            values.sort_unstable();
            let mut arrangements = vec![values.clone()];
            while next_permutation(&mut values) {
                arrangements.push(values.clone());
            }
            arrangements
        })
        .collect();

    let mut out = Vec::with_capacity(size as usize);
    let mut odometer = vec![0usize; per_class.len()];
    let mut entries = l.entries().to_vec();
    loop {
        for ((class, arrangements), &pick) in comp.classes().iter().zip(&per_class).zip(&odometer) {
            for (&j, &v) in class.positions.iter().zip(&arrangements[pick]) {
                entries[j - 1] = v;
            }
        }
        out.push(l.with_entries(entries.clone()));

        let mut digit = 0;
        loop {
            if digit == odometer.len() {
                out.sort();
                return Ok(out);
            }
            odometer[digit] += 1;
            if odometer[digit] < per_class[digit].len() {
                break;
            }
            odometer[digit] = 0;
            digit += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::same_orbit;
    use std::collections::HashSet;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn bw(parts: &[usize], entries: &[i64]) -> BlockWeight {
        BlockWeight::new(comp(parts), entries.to_vec()).unwrap()
    }

    const EX: [usize; 6] = [4, 1, 2, 1, 2, 4];

    #[test]
    fn sigma_examples() {
        let c = comp(&[1, 1]);
        let s = sigma_pq(&c, 1, 2).unwrap();
        assert_eq!(s.images(), vec![2, 1]);

        let c = comp(&EX);
        let s = sigma_pq(&c, 3, 5).unwrap();
        assert_eq!(s.images(), vec![1, 2, 5, 4, 3, 6]);

        assert_eq!(
            sigma_pq(&comp(&[2, 1]), 1, 2),
            Err(Error::BlockSizeMismatch {
                p: 1,
                q: 2,
                size_p: 2,
                size_q: 1
            })
        );
        assert_eq!(
            sigma_pq(&c, 3, 7),
            Err(Error::IndexOutOfRange { index: 7, k: 6 })
        );
    }

    #[test]
    fn apply_examples() {
        let c = comp(&EX);
        let mu = bw(&EX, &[4, 3, -1, -4, 2, -2]);
        let s = sigma_pq(&c, 3, 5).unwrap();
        let swapped = apply(&s, &mu).unwrap();
        assert_eq!(swapped.entries(), &[4, 3, 2, -4, -1, -2]);
        assert_eq!(apply(&s, &swapped).unwrap(), mu);
        assert_eq!(apply(&ThetaWeylElement::identity(c), &mu).unwrap(), mu);
        assert_eq!(
            apply(&s, &bw(&[1, 1], &[0, 1])),
            Err(Error::CompositionMismatch)
        );
    }

    #[test]
    fn apply_matches_inverse_image_formula() {
        let c = comp(&[1, 2, 1, 1]);
        let w = ThetaWeylElement::new(c.clone(), &[3, 2, 4, 1]).unwrap();
        let v = bw(&[1, 2, 1, 1], &[10, 20, 30, 40]);
        let out = apply(&w, &v).unwrap();
        let inv = inverse(&w);
        for i in 1..=4 {
            assert_eq!(out.entry(i), v.entry(inv.image_of(i)));
        }
    }

    #[test]
    fn group_structure() {
        let c = comp(&[1, 1]);
        let s = sigma_pq(&c, 1, 2).unwrap();
        assert!(compose(&s, &s).unwrap().is_identity());
        assert_eq!(inverse(&s), s);

        let c = comp(&[1, 2, 1, 2, 1]);
        let a = compose(&sigma_pq(&c, 1, 3).unwrap(), &sigma_pq(&c, 3, 5).unwrap()).unwrap();
        let b = sigma_pq(&c, 2, 4).unwrap();
        assert!(compose(&a, &inverse(&a)).unwrap().is_identity());
        let v = bw(&[1, 2, 1, 2, 1], &[1, 2, 3, 4, 5]);
        let ab = compose(&a, &b).unwrap();
        assert_eq!(
            apply(&ab, &v).unwrap(),
            apply(&a, &apply(&b, &v).unwrap()).unwrap()
        );
        assert_eq!(apply(&inverse(&a), &apply(&a, &v).unwrap()).unwrap(), v);
    }

    #[test]
    fn rejects_non_members() {
        let c = comp(&[2, 1, 2]);
        assert_eq!(
            ThetaWeylElement::new(c.clone(), &[2, 1, 3]),
            Err(Error::NotInWeylGroup)
        );
        assert_eq!(
            ThetaWeylElement::new(c.clone(), &[1, 1, 3]),
            Err(Error::NotInWeylGroup)
        );
        assert!(ThetaWeylElement::new(c, &[3, 2, 1]).is_ok());
    }

    #[test]
    fn orbit_examples() {
        let orbit = enumerate_orbit(&bw(&[1, 1], &[0, 1]), DEFAULT_ORBIT_CAP).unwrap();
        let got: Vec<Vec<i64>> = orbit.iter().map(|w| w.entries().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0]]);

        let lam = bw(&EX, &[-2, -4, -1, 3, 2, 4]);
        let orbit = enumerate_orbit(&lam, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(orbit.len(), 8);
        assert!(orbit.iter().all(|w| same_orbit(w, &lam).unwrap()));

        let orbit = enumerate_orbit(&bw(&[2, 2], &[5, 5]), DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(orbit.len(), 1);
    }

    #[test]
    fn orbit_cap() {
        let lam = bw(&[1, 1, 1, 1, 1], &[1, 2, 3, 4, 5]);
        assert_eq!(orbit_size(&lam), 120);
        assert_eq!(
            enumerate_orbit(&lam, 100),
            Err(Error::OrbitTooLarge {
                size: 120,
                cap: 100
            })
        );
    }

    #[test]
    fn orbit_size_matches_enumeration() {
        let lam = bw(&[1, 2, 1, 1, 2, 1, 2], &[0, 1, 0, 2, 1, 2, 3]);
        // class 1: {0,0,2,2} -> 6; class 2: {1,1,3} -> 3
        assert_eq!(orbit_size(&lam), 18);
        let orbit = enumerate_orbit(&lam, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(orbit.len(), 18);
        let distinct: HashSet<_> = orbit.iter().collect();
        assert_eq!(distinct.len(), 18);
        assert!(orbit.windows(2).all(|p| p[0] < p[1]));
    }

    fn compositions(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for mut rest in compositions(n - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    fn block_size_preserving_perms(parts: &[usize]) -> HashSet<Vec<usize>> {
        let k = parts.len();
        let mut out = HashSet::new();
        let mut perm: Vec<usize> = (0..k).collect();
        fn rec(i: usize, perm: &mut Vec<usize>, parts: &[usize], out: &mut HashSet<Vec<usize>>) {
            if i == perm.len() {
                if (0..perm.len()).all(|j| parts[perm[j]] == parts[j]) {
                    out.insert(perm.clone());
                }
                return;
            }
            for t in i..perm.len() {
                perm.swap(i, t);
                rec(i + 1, perm, parts, out);
                perm.swap(i, t);
            }
        }
        rec(0, &mut perm, parts, &mut out);
        out
    }

    #[test]
    fn sigmas_generate_the_group() {
        for k in 2..=5 {
            for n in k..=k + 3 {
                for parts in compositions(n).into_iter().filter(|p| p.len() == k) {
                    let c = comp(&parts);
                    let gens: Vec<ThetaWeylElement> = (1..=k)
                        .flat_map(|p| (p + 1..=k).map(move |q| (p, q)))
                        .filter_map(|(p, q)| sigma_pq(&c, p, q).ok())
                        .collect();
                    let mut closure: HashSet<Vec<usize>> = HashSet::new();
                    let mut frontier = vec![ThetaWeylElement::identity(c.clone())];
                    closure.insert(frontier[0].images());
                    while let Some(g) = frontier.pop() {
                        for s in &gens {
                            let h = compose(s, &g).unwrap();
                            if closure.insert(h.images()) {
                                frontier.push(h);
                            }
                        }
                    }
                    let expected: HashSet<Vec<usize>> = block_size_preserving_perms(&parts)
                        .into_iter()
                        .map(|p| p.into_iter().map(|i| i + 1).collect())
                        .collect();
                    assert_eq!(closure, expected, "composition {parts:?}");
                }
            }
        }
    }
}
