use super::{enumerate, Group};
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Largest group for which a full multiplication table is built.
pub const TABLE_LIMIT: usize = 4096;

/// An enumerated group with elements indexed `0..n` and precomputed
/// multiplication, inverse and order tables.
pub struct CayleyTable<E> {
    elems: Vec<E>,
    index: HashMap<E, u32>,
    table: Vec<u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    identity: u32,
}

impl<E: Clone + Eq + std::hash::Hash + Ord> CayleyTable<E> {
    pub fn build<G: Group<Elem = E>>(g: &G) -> Result<Self> {
        let elems = enumerate(g, TABLE_LIMIT).map_err(|_| Error::CapExceeded { cap: TABLE_LIMIT })?;
        let n = elems.len();
        let index: HashMap<E, u32> = elems.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        let mut table = vec![0u32; n * n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                table[i * n + j] = index[&g.mul(a, b)];
            }
        }
        let identity = index[&g.identity()];
        let inverse = (0..n).map(|i| index[&g.inv(&elems[i])]).collect();
        let mut orders = vec![0u32; n];
        for (i, slot) in orders.iter_mut().enumerate() {
            let mut x = i as u32;
            let mut k = 1;
            while x != identity {
                x = table[x as usize * n + i];
                k += 1;
            }
            *slot = k;
        }
        Ok(CayleyTable { elems, index, table, inverse, orders, identity })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.elems.len() + b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn order(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    pub fn element(&self, a: u32) -> &E {
        &self.elems[a as usize]
    }

    pub fn index_of(&self, e: &E) -> Option<u32> {
        self.index.get(e).copied()
    }

    /// Size of `⟨gens⟩`, stopping as soon as it reaches `stop_at`.
    pub fn closure_size(&self, gens: &[u32], stop_at: usize) -> usize {
        let n = self.elems.len();
        let mut seen = vec![false; n];
        seen[self.identity as usize] = true;
        let mut stack = vec![self.identity];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    count += 1;
                    if count >= stop_at {
                        return count;
                    }
                    stack.push(y);
                }
            }
        }
        count
    }

    /// Index-level conjugacy class representatives (class minima).
    pub fn class_reps(&self, gens: &[u32]) -> Vec<u32> {
        let n = self.elems.len();
        let mut seen = vec![false; n];
        let mut reps = Vec::new();
        for i in 0..n as u32 {
            if seen[i as usize] {
                continue;
            }
            reps.push(i);
            seen[i as usize] = true;
            let mut stack = vec![i];
            while let Some(x) = stack.pop() {
                for &s in gens {
                    let c = self.mul(self.mul(self.inv(s), x), s);
                    if !seen[c as usize] {
                        seen[c as usize] = true;
                        stack.push(c);
                    }
                }
            }
        }
        reps
    }
}
