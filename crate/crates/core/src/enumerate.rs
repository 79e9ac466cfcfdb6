//! Exhaustive generation of loop-free diagrams and of the fully commutative
//! elements that index them.

use std::collections::HashSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::factorize::factor;
use crate::heaps::Heap;
use crate::words::Word;

/// Largest `k` accepted by [`enumerate_diagrams`] unless a cap is given.
pub const DEFAULT_MAX_K: usize = 14;

/// `C_m = binom(2m, m) / (m + 1)`, exactly.
pub fn catalan(m: usize) -> BigUint {
    let mut binom = BigUint::from(1u32);
    for j in 0..m {
        binom = binom * BigUint::from(2 * m - j) / BigUint::from(j + 1);
    }
    binom / BigUint::from(m + 1)
}

pub fn enumerate_diagrams(k: usize) -> Result<Vec<Diagram>> {
    enumerate_diagrams_capped(k, DEFAULT_MAX_K)
}

/// All non-crossing perfect matchings of the `2k` nodes, i.e. every loop-free
/// `k`-diagram. Node 0 of the cyclic order `N_1..N_k, S_k..S_1` is matched first;
/// each choice of its partner is generated independently and the results are
/// concatenated in that order.
pub fn enumerate_diagrams_capped(k: usize, cap: usize) -> Result<Vec<Diagram>> {
    if k == 0 {
        return Err(Error::EmptyBox);
    }
    if k > cap {
        return Err(Error::BudgetExceeded { k, cap });
    }
    let total = 2 * k;
    let branches: Vec<Vec<Diagram>> = (1..total)
        .step_by(2)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|first| {
            let mut partner = vec![usize::MAX; total];
            partner[0] = first;
            partner[first] = 0;
            let mut pending = vec![(first + 1, total), (1, first)];
            let mut out = Vec::new();
            fill(&mut partner, &mut pending, k, &mut out);
            out
        })
        .collect();
    Ok(branches.into_iter().flatten().collect())
}

fn fill(cyclic: &mut [usize], pending: &mut Vec<(usize, usize)>, k: usize, out: &mut Vec<Diagram>) {
    let Some((a, b)) = pending.pop() else {
        out.push(from_cyclic(cyclic, k));
        return;
    };
    if a == b {
        fill(cyclic, pending, k, out);
    } else {
        for m in (a + 1..b).step_by(2) {
            cyclic[a] = m;
            cyclic[m] = a;
            pending.push((m + 1, b));
            pending.push((a + 1, m));
            fill(cyclic, pending, k, out);
            pending.pop();
            pending.pop();
        }
    }
    pending.push((a, b));
}

fn from_cyclic(cyclic: &[usize], k: usize) -> Diagram {
    // Cyclic slot c < k is N_{c+1} (node c); slot c >= k is S_{2k-c} (node 3k-c-1).
    let node = |c: usize| if c < k { c } else { 3 * k - c - 1 };
    let mut partner = vec![0; 2 * k];
    for (c, &m) in cyclic.iter().enumerate() {
        partner[node(c)] = node(m);
    }
    Diagram::from_partner_unchecked(k, partner)
}

#[derive(Debug, Clone)]
pub struct FcItem {
    pub word: Word,
    pub heap: Heap,
    pub diagram: Diagram,
}

/// Every fully commutative element of `W(A_n)` with its heap and diagram.
#[derive(Debug, Clone)]
pub struct FcCatalog {
    pub rank: usize,
    /// Ordered by the serialised diagram.
    pub items: Vec<FcItem>,
}

impl FcCatalog {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// No two items share a heap or a diagram.
    pub fn is_bijective(&self) -> bool {
        let heaps: HashSet<Vec<(usize, usize)>> =
            self.items.iter().map(|i| i.heap.lattice_points()).collect();
        let diagrams: HashSet<&Diagram> = self.items.iter().map(|i| &i.diagram).collect();
        heaps.len() == self.items.len() && diagrams.len() == self.items.len()
    }
}

/// Builds the catalog by factoring every loop-free `(n + 1)`-diagram.
pub fn enumerate_fc(n: usize) -> Result<FcCatalog> {
    let diagrams = enumerate_diagrams(n + 1)?;
    let mut items = diagrams
        .into_par_iter()
        .map(|diagram| {
            let word = factor(&diagram)?;
            let heap = Heap::from_word(&word);
            if !heap.is_fc_reduced() {
                return Err(Error::NotReduced);
            }
            Ok((
                diagram.to_json(),
                FcItem {
                    word,
                    heap,
                    diagram,
                },
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    items.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(FcCatalog {
        rank: n,
        items: items.into_iter().map(|(_, i)| i).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        let expected = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786];
        for (m, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(m), BigUint::from(c), "C_{m}");
        }
        assert_eq!(catalan(14), BigUint::from(2_674_440u64));
        // Past u64 range for the intermediate binomial.
        assert_eq!(catalan(40).to_string(), "2622127042276492108820");
    }

    #[test]
    fn small_enumerations() {
        let two = enumerate_diagrams(2).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.contains(&Diagram::identity(2)));
        assert!(two.contains(&Diagram::simple(1, 1).unwrap()));
        assert_eq!(enumerate_diagrams(1).unwrap(), vec![Diagram::identity(1)]);
        assert_eq!(enumerate_diagrams(3).unwrap().len(), 5);
        assert_eq!(enumerate_diagrams(6).unwrap().len(), 132);
    }

    #[test]
    fn counts_match_catalan() {
        for k in 1..=10 {
            let all = enumerate_diagrams(k).unwrap();
            assert_eq!(BigUint::from(all.len()), catalan(k));
            let distinct: HashSet<String> = all.iter().map(Diagram::to_json).collect();
            assert_eq!(distinct.len(), all.len());
            for d in &all {
                d.validate().unwrap();
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_diagrams(15),
            Err(Error::BudgetExceeded { k: 15, cap: 14 })
        );
        assert_eq!(
            enumerate_diagrams_capped(5, 4),
            Err(Error::BudgetExceeded { k: 5, cap: 4 })
        );
        assert_eq!(enumerate_diagrams(0), Err(Error::EmptyBox));
    }

    #[test]
    fn fc_catalogs() {
        let one = enumerate_fc(1).unwrap();
        let mut words: Vec<String> = one.items.iter().map(|i| i.word.to_string()).collect();
        words.sort();
        assert_eq!(words, vec!["", "1"]);

        let four = enumerate_fc(4).unwrap();
        assert_eq!(four.len(), 42);
        assert!(four.is_bijective());
        let jsons: Vec<String> = four.items.iter().map(|i| i.diagram.to_json()).collect();
        let mut sorted = jsons.clone();
        sorted.sort();
        assert_eq!(jsons, sorted);

        assert_eq!(enumerate_fc(0).unwrap().len(), 1);
    }
}
