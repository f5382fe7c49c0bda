//! Finite abelian p-covers of a wedge of circles, built as towers of
//! coset tables.
//!
//! A surface with free fundamental group `F` of rank `b` is homotopy
//! equivalent to a wedge of `b` circles, so every covering space is
//! described by the permutation action of the generators on the cosets
//! of the corresponding subgroup.  We work with towers
//!
//! ```text
//! F = F_(0) ⊇ F_(1) ⊇ ... ⊇ F_(h) ⊇ F_(h+1)
//! ```
//!
//! where each `F_(t+1)` is the kernel of a surjective character
//! `χ_t : F_(t) → A_t` onto a finite abelian p-group, and the final step
//! is the kernel of a cyclic character `φ : F_(h) → Z_d` with `d` a power
//! of `p`.  Each `F_(t)` is a free group; a Schreier transversal (chosen
//! by breadth-first search with lexicographically least edge labels, so
//! the construction is deterministic) exhibits a free basis, the Schreier
//! generators, on which the next character is specified.
//!
//! Cosets of `F_(t+1)` in `F` are pairs `(c, a)` of a coset of `F_(t)` and
//! an element `a ∈ A_t`; a generator moves `(c, a)` to `(c·g, a + v)`
//! where `v` is the value of `χ_t` on the Schreier generator attached to
//! the edge `(c, g)` (zero for spanning-tree edges).  Connectivity of the
//! resulting graph is exactly surjectivity of the character.
//!
//! The tower has *order q* when `F_q ⊆ F_(h+1)`, with `F_q` the lower
//! central series.  Since `F_(h+1)` has finite index, this is decided in
//! the finite permutation image `G` of `F` on the cosets of `F_(h+1)`:
//! the condition holds if and only if `γ_q(G)` fixes the base coset, and
//! because `γ_q(G)` is normal and `G` transitive, if and only if `γ_q(G)`
//! is trivial.
//!
//! For a loop `α`, the components of its preimage in the level-`h` cover
//! are the cycles of the permutation of `α` on cosets of `F_(h)`: a cycle
//! of length `r` is a lift winding `r` times, and `φ` evaluated on the
//! Schreier rewriting of `α^r` based at the least coset of the cycle is
//! the character value `ψ` of that lift.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::cylinder::CylinderClass;
use crate::error::Error;
use crate::word::{SurfaceBasis, Word};

/// A homomorphism from a free group onto a finite abelian p-group,
/// specified by its values on a free basis (the Schreier generators of
/// the level the character lives on).
///
/// The target is `Z_{orders[0]} × ... × Z_{orders[r-1]}`; `values[e]` is
/// the image of the `e`-th Schreier generator, one coordinate per cyclic
/// factor, each reduced modulo its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    orders: Vec<u64>,
    values: Vec<Vec<u64>>,
}

impl Character {
    pub fn new(orders: Vec<u64>, values: Vec<Vec<u64>>) -> Result<Character, Error> {
        if orders.is_empty() || orders.iter().any(|&o| o < 2) {
            return Err(Error::invalid("character target orders must all be at least 2"));
        }
        for v in &values {
            if v.len() != orders.len() {
                return Err(Error::invalid("character value has wrong number of coordinates"));
            }
            if v.iter().zip(&orders).any(|(&x, &o)| x >= o) {
                return Err(Error::invalid("character value out of range for its cyclic order"));
            }
        }
        Ok(Character { orders, values })
    }

    /// A character onto a single cyclic group `Z_d`.
    pub fn cyclic(d: u64, values: Vec<u64>) -> Result<Character, Error> {
        Character::new(vec![d], values.into_iter().map(|v| vec![v]).collect())
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn values(&self) -> &[Vec<u64>] {
        &self.values
    }

    /// Size of the target group.
    pub fn target_order(&self) -> u64 {
        self.orders.iter().product()
    }
}

/// Permutation action of the ambient free generators on the cosets of a
/// finite-index subgroup, together with a breadth-first Schreier
/// transversal and an indexing of the non-tree edges (the Schreier
/// generators of the subgroup).
#[derive(Clone, Debug)]
struct CosetTable {
    rank: usize,
    size: usize,
    /// `forward[c * rank + g]` is the coset reached from `c` by generator `g+1`.
    forward: Vec<u32>,
    /// `backward[c * rank + g]` is the coset `c'` with `c'·(g+1) = c`.
    backward: Vec<u32>,
    /// Schreier generator index of each non-tree forward edge, `None` on
    /// spanning-tree edges.
    edge_index: Vec<Option<usize>>,
    schreier_count: usize,
}

impl CosetTable {
    /// Builds the transversal data for a transitive action given by the
    /// forward permutation of each generator.  Fails if the action is not
    /// transitive (a disconnected cover).
    fn new(rank: usize, forward: Vec<u32>) -> Result<CosetTable, Error> {
        let size = forward.len() / rank;
        let mut backward = vec![0u32; size * rank];
        for c in 0..size {
            for g in 0..rank {
                backward[forward[c * rank + g] as usize * rank + g] = c as u32;
            }
        }
        // Breadth-first spanning tree from the base coset, trying the
        // edge labels of each coset in the fixed order 1, 1^{-1}, 2,
        // 2^{-1}, ... so that the transversal is deterministic.
        let mut tree = vec![false; size * rank];
        let mut seen = vec![false; size];
        seen[0] = true;
        let mut queue = vec![0u32];
        let mut head = 0;
        while head < queue.len() {
            let c = queue[head] as usize;
            head += 1;
            for g in 0..rank {
                let fwd = forward[c * rank + g] as usize;
                if !seen[fwd] {
                    seen[fwd] = true;
                    tree[c * rank + g] = true;
                    queue.push(fwd as u32);
                }
                let bwd = backward[c * rank + g] as usize;
                if !seen[bwd] {
                    seen[bwd] = true;
                    tree[bwd * rank + g] = true;
                    queue.push(bwd as u32);
                }
            }
        }
        if queue.len() != size {
            return Err(Error::invalid("cover is disconnected: character is not surjective"));
        }
        let mut edge_index = vec![None; size * rank];
        let mut schreier_count = 0;
        for e in 0..size * rank {
            if !tree[e] {
                edge_index[e] = Some(schreier_count);
                schreier_count += 1;
            }
        }
        Ok(CosetTable { rank, size, forward, backward, edge_index, schreier_count })
    }

    /// The one-coset table for the whole group; every generator edge is a
    /// Schreier generator.
    fn trivial(rank: usize) -> CosetTable {
        CosetTable::new(rank, (0..rank).map(|_| 0u32).collect()).expect("one coset")
    }

    /// Coset reached from `start` by reading `word` left to right.
    fn act(&self, start: u32, word: &Word) -> u32 {
        let mut c = start;
        for &letter in word.letters() {
            let g = letter.unsigned_abs() as usize - 1;
            c = if letter > 0 {
                self.forward[c as usize * self.rank + g]
            } else {
                self.backward[c as usize * self.rank + g]
            };
        }
        c
    }

    /// Reads `word` from `start`, returning the end coset and the signed
    /// count of each Schreier generator crossed — the Schreier rewriting
    /// of the word, abelianized.
    fn rewrite(&self, start: u32, word: &Word) -> (u32, Vec<i64>) {
        let mut c = start;
        let mut counts = vec![0i64; self.schreier_count];
        for &letter in word.letters() {
            let g = letter.unsigned_abs() as usize - 1;
            if letter > 0 {
                if let Some(e) = self.edge_index[c as usize * self.rank + g] {
                    counts[e] += 1;
                }
                c = self.forward[c as usize * self.rank + g];
            } else {
                c = self.backward[c as usize * self.rank + g];
                if let Some(e) = self.edge_index[c as usize * self.rank + g] {
                    counts[e] -= 1;
                }
            }
        }
        (c, counts)
    }

    /// The table one level down: cosets are pairs of a coset here and an
    /// element of the character's target, with edge voltages given by the
    /// character values on non-tree edges.
    fn extend(&self, chi: &Character) -> Result<CosetTable, Error> {
        if chi.values.len() != self.schreier_count {
            return Err(Error::invalid(
                "character must assign a value to each Schreier generator of its level",
            ));
        }
        let asize = chi.target_order() as usize;
        let nfac = chi.orders.len();
        // Mixed-radix encoding of target elements, most significant first.
        let encode = |a: &[u64]| -> usize {
            let mut idx = 0usize;
            for (i, &x) in a.iter().enumerate() {
                idx = idx * chi.orders[i] as usize + x as usize;
            }
            idx
        };
        let zero = vec![0u64; nfac];
        let mut elements = Vec::with_capacity(asize);
        let mut cur = zero;
        loop {
            elements.push(cur.clone());
            let mut i = nfac;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < chi.orders[i] {
                    break;
                }
                cur[i] = 0;
            }
            if cur.iter().all(|&x| x == 0) {
                break;
            }
        }
        let size = self.size * asize;
        let mut forward = vec![0u32; size * self.rank];
        for c in 0..self.size {
            for g in 0..self.rank {
                let target = self.forward[c * self.rank + g] as usize;
                let voltage = self.edge_index[c * self.rank + g].map(|e| &chi.values[e]);
                for (ai, a) in elements.iter().enumerate() {
                    let new_a = match voltage {
                        None => ai,
                        Some(v) => {
                            let summed: Vec<u64> = a
                                .iter()
                                .zip(v)
                                .zip(&chi.orders)
                                .map(|((&x, &y), &o)| (x + y) % o)
                                .collect();
                            encode(&summed)
                        }
                    };
                    forward[(c * asize + ai) * self.rank + g] = (target * asize + new_a) as u32;
                }
            }
        }
        CosetTable::new(self.rank, forward)
    }
}

/// A p-structure: a tower of connected finite abelian p-covers of the
/// surface together with a cyclic character `φ : F_(h) → Z_d` on the top
/// level.  Immutable once built; all queries are pure.
#[derive(Clone, Debug)]
pub struct PStructure {
    basis: SurfaceBasis,
    p: u64,
    characters: Vec<Character>,
    phi: Character,
    /// Coset tables of `F_(t)` in `F` for `t = 0, ..., h+1`.
    tables: Vec<CosetTable>,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= p {
        if p % q == 0 {
            return false;
        }
        q += 1;
    }
    true
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Builds the coset tables of a tower of characters level by level,
/// verifying at each level that the target orders are powers of `p` and
/// that the character is surjective (the next cover is connected).
///
/// `characters` holds `χ_0, ..., χ_{h-1}`; `phi` is the cyclic top
/// character onto `Z_d`.  `χ_0` (or `phi`, at height zero) is specified
/// on the ambient generators themselves, each later character on the
/// Schreier generators of the previous kernel, in the deterministic
/// order produced by the breadth-first transversal.
pub fn tower_build(
    basis: &SurfaceBasis,
    p: u64,
    characters: Vec<Character>,
    phi: Character,
) -> Result<PStructure, Error> {
    if !is_prime(p) {
        return Err(Error::invalid("tower modulus must be prime"));
    }
    if phi.orders.len() != 1 {
        return Err(Error::invalid("top character must have a cyclic target"));
    }
    for chi in characters.iter().chain(core::iter::once(&phi)) {
        if chi.orders.iter().any(|&o| !is_power_of(o, p)) {
            return Err(Error::invalid("character target orders must be powers of the tower prime"));
        }
    }
    let mut tables = vec![CosetTable::trivial(basis.rank())];
    for chi in &characters {
        let next = tables.last().unwrap().extend(chi)?;
        tables.push(next);
    }
    let top = tables.last().unwrap().extend(&phi)?;
    tables.push(top);
    Ok(PStructure { basis: basis.clone(), p, characters, phi, tables })
}

impl PStructure {
    pub fn basis(&self) -> &SurfaceBasis {
        &self.basis
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// Number of intermediate characters `χ_t`.
    pub fn height(&self) -> usize {
        self.characters.len()
    }

    /// Order of the cyclic target of the top character.
    pub fn d(&self) -> u64 {
        self.phi.orders[0]
    }

    /// Index of `F_(t)` in the ambient free group, for `t ≤ height + 1`.
    pub fn index_at(&self, t: usize) -> usize {
        self.tables[t].size
    }

    /// Rank of the free group `F_(t)` (its number of Schreier generators).
    pub fn schreier_rank(&self, t: usize) -> usize {
        self.tables[t].schreier_count
    }

    /// Whether `word` lies in `F_(t)`, i.e. its coset action fixes the
    /// base coset at level `t`.
    pub fn stabilizes(&self, word: &Word, t: usize) -> bool {
        self.tables[t].act(0, word) == 0
    }
}

/// One component of the preimage of a loop in the level-`h` cover: it
/// winds `degree` times over the loop, and the top character sends its
/// class to `psi ∈ Z_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub degree: usize,
    pub psi: u64,
}

/// The lifting data of a loop: one entry per cycle of its permutation on
/// the level-`h` cosets, ordered by least coset in the cycle.  The
/// degrees sum to the covering degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftData {
    pub lifts: Vec<Lift>,
}

impl LiftData {
    pub fn total_degree(&self) -> usize {
        self.lifts.iter().map(|l| l.degree).sum()
    }
}

/// Decomposes the permutation of `alpha` on the cosets of `F_(h)` into
/// cycles and evaluates the top character on each component.
///
/// A cycle of length `r` based at its least coset `c` is a lift of
/// `alpha` winding `r` times; `α^r` then fixes `c`, and `φ` applied to
/// its Schreier rewriting (based at `c`) is the character value of the
/// lift.  The value can depend on the choice of base coset within the
/// cycle in general; taking the least coset makes it deterministic.
pub fn lift_loop(tower: &PStructure, alpha: &Word) -> LiftData {
    let table = &tower.tables[tower.height()];
    let d = tower.d();
    let mut seen = vec![false; table.size];
    let mut lifts = Vec::new();
    for start in 0..table.size as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut degree = 0;
        let mut c = start;
        loop {
            seen[c as usize] = true;
            degree += 1;
            c = table.act(c, alpha);
            if c == start {
                break;
            }
        }
        let mut psi: i64 = 0;
        let mut at = start;
        for _ in 0..degree {
            let (next, counts) = table.rewrite(at, alpha);
            for (e, &k) in counts.iter().enumerate() {
                psi += k * tower.phi.values[e][0] as i64;
            }
            at = next;
        }
        debug_assert_eq!(at, start);
        lifts.push(Lift { degree, psi: psi.rem_euclid(d as i64) as u64 });
    }
    LiftData { lifts }
}

/// Finds the least `q ≤ cutoff` such that `F_q ⊆ F_(h+1)`, by computing
/// the lower central series of the finite permutation image `G` of the
/// ambient group on the top-level cosets.  `γ_q(G)` is normal and `G`
/// transitive, so `γ_q(G)` fixes the base coset exactly when it is
/// trivial.  Returns `None` when the order exceeds `cutoff`.
///
/// Generating sets of the series are maintained explicitly:
/// `γ_{q+1}(G)` is generated, as a normal subgroup, by the commutators
/// of the generators of `G` with those of `γ_q(G)`, so a plain closure
/// under conjugation by the generators of `G` suffices.
pub fn tower_order(tower: &PStructure, cutoff: usize) -> Option<usize> {
    let table = tower.tables.last().unwrap();
    let rank = table.rank;
    let size = table.size;
    let identity: Vec<u32> = (0..size as u32).collect();
    let mut gens: Vec<Vec<u32>> = Vec::with_capacity(rank);
    for g in 0..rank {
        gens.push((0..size).map(|c| table.forward[c * rank + g]).collect());
    }
    let invert = |a: &[u32]| -> Vec<u32> {
        let mut inv = vec![0u32; size];
        for (i, &x) in a.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        inv
    };
    let compose = |a: &[u32], b: &[u32]| -> Vec<u32> {
        a.iter().map(|&x| b[x as usize]).collect()
    };
    // Generators of γ_q(G), starting at q = 1 with G itself.
    let mut layer: Vec<Vec<u32>> =
        gens.iter().filter(|a| **a != identity).cloned().collect();
    for q in 1..=cutoff {
        if layer.is_empty() {
            return Some(q);
        }
        let mut closure: BTreeSet<Vec<u32>> = BTreeSet::new();
        for s in &layer {
            let s_inv = invert(s);
            for g in &gens {
                let g_inv = invert(g);
                let comm = compose(&compose(&g_inv, &s_inv), &compose(g, s));
                if comm != identity {
                    closure.insert(comm);
                }
            }
        }
        let mut queue: Vec<Vec<u32>> = closure.iter().cloned().collect();
        while let Some(a) = queue.pop() {
            for g in &gens {
                let conj = compose(&compose(&invert(g), &a), g);
                if conj != identity && closure.insert(conj.clone()) {
                    queue.push(conj);
                }
            }
        }
        layer = closure.into_iter().collect();
    }
    None
}

/// Tests whether each milnor coordinate of `class`, viewed in `F_(t)`,
/// vanishes in `H_1(F_(t)) ⊗ Z_{p^s}`: the coordinate is Schreier
/// rewritten, abelianized, and reduced modulo `p^s`.
///
/// Errors when a coordinate does not lie in `F_(t)` at all (its coset
/// action moves the base coset), since the test is then meaningless.
pub fn check_c5(
    tower: &PStructure,
    class: &CylinderClass,
    t: usize,
    s: u32,
) -> Result<Vec<bool>, Error> {
    check_c5_words(tower, class.milnor(), t, s)
}

/// The same homology test applied to explicit words instead of a
/// cylinder class.
pub fn check_c5_words(
    tower: &PStructure,
    words: &[Word],
    t: usize,
    s: u32,
) -> Result<Vec<bool>, Error> {
    if t >= tower.tables.len() {
        return Err(Error::invalid("level exceeds the height of the tower"));
    }
    let table = &tower.tables[t];
    let modulus = tower
        .p
        .checked_pow(s)
        .ok_or_else(|| Error::invalid("modulus exponent too large"))? as i64;
    let mut results = Vec::with_capacity(words.len());
    for w in words {
        let (end, counts) = table.rewrite(0, w);
        if end != 0 {
            return Err(Error::invalid(
                "word does not lie in the requested tower level",
            ));
        }
        results.push(counts.iter().all(|&k| k.rem_euclid(modulus) == 0));
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyndon::basic_commutators;
    use alloc::vec;

    fn b3() -> SurfaceBasis {
        SurfaceBasis::new(0, 3).unwrap()
    }

    #[test]
    fn height_zero_mod_two_cover() {
        let basis = b3();
        let phi = Character::cyclic(2, vec![1, 0]).unwrap();
        let tower = tower_build(&basis, 2, vec![], phi).unwrap();
        assert_eq!(tower.height(), 0);
        assert_eq!(tower.index_at(0), 1);
        assert_eq!(tower.index_at(1), 2);
        // The kernel of x1 ↦ 1, x2 ↦ 0 has rank 1 + 2·1 = 3.
        assert_eq!(tower.schreier_rank(1), 3);
        // Level h = 0 has a single coset: one lift carrying φ(α).
        let data = lift_loop(&tower, &Word::generator(1));
        assert_eq!(data.lifts, vec![Lift { degree: 1, psi: 1 }]);
        let data = lift_loop(&tower, &Word::generator(2));
        assert_eq!(data.lifts, vec![Lift { degree: 1, psi: 0 }]);
        // An abelian quotient kills every commutator, so the order is 2.
        assert_eq!(tower_order(&tower, 10), Some(2));
    }

    #[test]
    fn zero_character_rejected() {
        let basis = b3();
        let phi = Character::cyclic(3, vec![0, 0]).unwrap();
        assert!(tower_build(&basis, 3, vec![], phi).is_err());
    }

    #[test]
    fn lift_cycles_over_p_fold_cover() {
        let basis = b3();
        let chi = Character::cyclic(3, vec![1, 0]).unwrap();
        // The index-3 kernel has rank 1 + 3·1 = 4.
        let phi = Character::cyclic(3, vec![1, 0, 0, 0]).unwrap();
        let tower = tower_build(&basis, 3, vec![chi], phi).unwrap();
        assert_eq!(tower.index_at(1), 3);
        assert_eq!(tower.schreier_rank(1), 4);
        // x2 fixes every coset of the level-1 cover: three lifts of degree 1.
        let data = lift_loop(&tower, &Word::generator(2));
        assert_eq!(data.lifts.len(), 3);
        assert!(data.lifts.iter().all(|l| l.degree == 1));
        // x1 permutes the three cosets cyclically: one lift of degree 3.
        let data = lift_loop(&tower, &Word::generator(1));
        assert_eq!(data.lifts.len(), 1);
        assert_eq!(data.lifts[0].degree, 3);
        assert_eq!(data.total_degree(), tower.index_at(1));
    }

    #[test]
    fn order_matches_basic_commutator_action() {
        // Independent recomputation of the order: F_q acts trivially on
        // the top cosets if and only if every basic commutator of weight
        // q does, since they generate F_q modulo F_{q+1} and triviality
        // propagates up the lower central series.
        let basis = b3();
        let chi = Character::new(vec![2, 2], vec![vec![1, 0], vec![0, 1]]).unwrap();
        let phi = Character::cyclic(2, vec![1, 1, 1, 1, 1]).unwrap();
        let tower = tower_build(&basis, 2, vec![chi], phi).unwrap();
        let by_lcs = tower_order(&tower, 8).unwrap();
        let table = tower.tables.last().unwrap();
        let mut by_commutators = None;
        for q in 1..=8 {
            let trivial = basic_commutators(q, 2).iter().all(|w| {
                (0..table.size as u32).all(|c| table.act(c, w) == c)
            });
            if trivial {
                by_commutators = Some(q);
                break;
            }
        }
        assert_eq!(Some(by_lcs), by_commutators);
    }

    #[test]
    fn class_two_image_gives_order_three() {
        // Above the double cover cut along x1, reading the Schreier
        // generator x2 mod 2 produces a dihedral image of order 8:
        // nonabelian of nilpotency class 2, so the order is 3.
        let basis = b3();
        let chi = Character::cyclic(2, vec![1, 0]).unwrap();
        let phi = Character::cyclic(2, vec![1, 0, 0]).unwrap();
        let tower = tower_build(&basis, 2, vec![chi], phi).unwrap();
        assert_eq!(tower_order(&tower, 10), Some(3));
    }

    #[test]
    fn homology_vanishing_at_level_one() {
        let basis = b3();
        let chi = Character::new(vec![2, 2], vec![vec![1, 0], vec![0, 1]]).unwrap();
        let phi = Character::cyclic(2, vec![1, 0, 0, 0, 0]).unwrap();
        let tower = tower_build(&basis, 2, vec![chi], phi).unwrap();
        // Squares of the ambient generators lie in the level-1 kernel;
        // their commutator vanishes in its homology while the squares
        // themselves are single Schreier generators and do not.
        let u = Word::generator(1).pow(2);
        let v = Word::generator(2).pow(2);
        let comm = Word::commutator(&u, &v);
        assert_eq!(
            check_c5_words(&tower, &[comm], 1, 1).unwrap(),
            vec![true]
        );
        assert_eq!(
            check_c5_words(&tower, &[u, v], 1, 1).unwrap(),
            vec![false, false]
        );
        // The trivial class passes at every level.
        let class = CylinderClass::trivial(b3());
        assert_eq!(check_c5(&tower, &class, 2, 2).unwrap(), vec![true, true]);
        // A word outside the level is rejected.
        assert!(check_c5_words(&tower, &[Word::generator(1)], 1, 1).is_err());
    }

    #[test]
    fn residual_separation_of_short_words() {
        // Mod-p abelianization towers already separate any word that is
        // nontrivial in H_1 mod p for some p in {2, 3}.
        let basis = b3();
        for p in [2u64, 3] {
            let phi = Character::cyclic(p, vec![1, 0]).unwrap();
            let tower = tower_build(&basis, p, vec![], phi).unwrap();
            assert!(!tower.stabilizes(&Word::generator(1), 1));
            assert!(tower.stabilizes(&Word::generator(2), 1));
        }
    }
}
