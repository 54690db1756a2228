//! 1-freezifications of an algebra's operations and their composition
//! closure.
//!
//! Freezing all but one argument of an operation of arity >= 1 yields a
//! unary map; arity-1 operations are their own sole freezification and
//! constants contribute nothing (there is no free slot to keep). The
//! composition closure additionally contains the identity (composition of
//! the empty sequence) and is finite: there are at most `n^n` unary maps
//! on an `n`-element carrier.

use super::relations::{check_table_fits, compatible_with_table};
use super::{for_each_tuple, AlgebraError, FiniteAlgebra, PreorderRel};
use std::collections::HashMap;

/// Provenance strings deeper than this many composition steps are elided.
pub const PROVENANCE_DEPTH: usize = 8;

/// A unary self-map of the carrier, deduplicated by image vector.
///
/// `provenance` lists every origin that produced the same image: frozen
/// operations are rendered as `name[i=pos;c=(frozen args)]` and
/// compositions as `g∘f` words, truncated at [`PROVENANCE_DEPTH`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnaryMap {
    pub image: Vec<usize>,
    pub provenance: Vec<String>,
}

impl UnaryMap {
    pub fn identity(n: usize) -> Self {
        UnaryMap { image: (0..n).collect(), provenance: vec!["id".to_string()] }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }
}

/// Composition `then ∘ first` (apply `first`, then `then`).
pub fn compose(then: &UnaryMap, first: &UnaryMap) -> UnaryMap {
    let image = first.image.iter().map(|&x| then.image[x]).collect();
    let left = then.provenance.first().map(String::as_str).unwrap_or("?");
    let right = first.provenance.first().map(String::as_str).unwrap_or("?");
    let word = if right == "id" {
        left.to_string()
    } else if left == "id" {
        right.to_string()
    } else if right.matches('∘').count() + 2 > PROVENANCE_DEPTH {
        format!("{left}∘…")
    } else {
        format!("{left}∘{right}")
    };
    UnaryMap { image, provenance: vec![word] }
}

/// All 1-freezifications of every operation of arity >= 1, in declaration
/// order, free position ascending, frozen tuple in row-major order.
/// Duplicates by image are merged; provenance lists all origins.
pub fn freezifications(alg: &FiniteAlgebra) -> Vec<UnaryMap> {
    let n = alg.carrier_size();
    let mut maps: Vec<UnaryMap> = Vec::new();
    let mut index_of: HashMap<Vec<usize>, usize> = HashMap::new();
    for op in alg.operations() {
        if op.arity == 0 {
            continue;
        }
        if op.arity == 1 {
            push_map(&mut maps, &mut index_of, op.table.clone(), op.name.clone());
            continue;
        }
        for free_pos in 0..op.arity {
            for_each_tuple(n, op.arity - 1, |frozen| {
                let image: Vec<usize> = (0..n)
                    .map(|x| {
                        let mut args = Vec::with_capacity(op.arity);
                        let mut fi = 0;
                        for pos in 0..op.arity {
                            if pos == free_pos {
                                args.push(x);
                            } else {
                                args.push(frozen[fi]);
                                fi += 1;
                            }
                        }
                        alg.eval(op, &args)
                    })
                    .collect();
                let tag = format!(
                    "{}[i={};c=({})]",
                    op.name,
                    free_pos + 1,
                    frozen.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
                );
                push_map(&mut maps, &mut index_of, image, tag);
            });
        }
    }
    maps
}

fn push_map(
    maps: &mut Vec<UnaryMap>,
    index_of: &mut HashMap<Vec<usize>, usize>,
    image: Vec<usize>,
    tag: String,
) {
    match index_of.get(&image) {
        Some(&i) => maps[i].provenance.push(tag),
        None => {
            index_of.insert(image.clone(), maps.len());
            maps.push(UnaryMap { image, provenance: vec![tag] });
        }
    }
}

/// Composition closure of the 1-freezifications together with the
/// identity. Breadth-first, deterministic order, deduplicated by image.
pub fn freez_star(alg: &FiniteAlgebra) -> Vec<UnaryMap> {
    let n = alg.carrier_size();
    let gens = freezifications(alg);
    let mut maps = vec![UnaryMap::identity(n)];
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    seen.insert(maps[0].image.clone(), 0);
    let mut frontier = 0;
    while frontier < maps.len() {
        let current = maps[frontier].clone();
        for g in &gens {
            let next = compose(g, &current);
            if !seen.contains_key(&next.image) {
                seen.insert(next.image.clone(), maps.len());
                maps.push(next);
            }
        }
        frontier += 1;
    }
    maps
}

/// Checks the reduction-to-arity-1 law on one instance: a preorder is
/// compatible with an operation table exactly when it is compatible with
/// each of its 1-freezifications. True for every preorder; a `false`
/// signals an implementation bug.
pub fn verify_freezification_lemma(
    alg: &FiniteAlgebra,
    rel: &PreorderRel,
    arity: usize,
    table: &[usize],
) -> Result<bool, AlgebraError> {
    let n = alg.carrier_size();
    check_table_fits(n, arity, table)?;
    let direct = compatible_with_table(n, arity, table, |x, y| rel.relates(x, y));
    let probe = FiniteAlgebra::new(
        n,
        vec![super::Operation::new("probe", arity, table.to_vec())],
    )?;
    let via_freezifications = freezifications(&probe)
        .iter()
        .all(|g| compatible_with_table(n, 1, &g.image, |x, y| rel.relates(x, y)));
    Ok(direct == via_freezifications)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Operation;

    fn alg(n: usize, ops: Vec<Operation>) -> FiniteAlgebra {
        FiniteAlgebra::new(n, ops).unwrap()
    }

    #[test]
    fn unary_op_is_its_own_sole_freezification() {
        let s = alg(2, vec![Operation::new("s", 1, vec![1, 0])]);
        let maps = freezifications(&s);
        assert_eq!(maps.len(), 1);
        assert_eq!(maps[0].image, vec![1, 0]);
    }

    #[test]
    fn mod3_addition_gives_three_translations() {
        let table: Vec<usize> = (0..9).map(|i| (i / 3 + i % 3) % 3).collect();
        let a = alg(3, vec![Operation::new("add", 2, table)]);
        let maps = freezifications(&a);
        let images: Vec<Vec<usize>> = maps.iter().map(|m| m.image.clone()).collect();
        assert_eq!(images.len(), 3);
        assert!(images.contains(&vec![0, 1, 2]));
        assert!(images.contains(&vec![1, 2, 0]));
        assert!(images.contains(&vec![2, 0, 1]));
        // each translation arises from both frozen coordinates
        for m in &maps {
            assert_eq!(m.provenance.len(), 2, "provenance {:?}", m.provenance);
        }
    }

    #[test]
    fn constants_contribute_nothing() {
        let a = alg(2, vec![Operation::new("c", 0, vec![1])]);
        assert!(freezifications(&a).is_empty());
        let star = freez_star(&a);
        assert_eq!(star.len(), 1);
        assert_eq!(star[0].image, vec![0, 1]);
    }

    #[test]
    fn star_of_mod5_increment_is_all_rotations() {
        let a = alg(5, vec![Operation::new("suc", 1, vec![1, 2, 3, 4, 0])]);
        let star = freez_star(&a);
        assert_eq!(star.len(), 5);
        assert_eq!(star[0].image, (0..5).collect::<Vec<_>>());
    }

    #[test]
    fn star_of_boolean_and() {
        // freezifications of AND: x↦AND(0,x)=0 and x↦AND(1,x)=x (twice each);
        // the closure is {identity, constant 0}.
        let a = alg(2, vec![Operation::new("and", 2, vec![0, 0, 0, 1])]);
        let star = freez_star(&a);
        let images: Vec<Vec<usize>> = star.iter().map(|m| m.image.clone()).collect();
        assert_eq!(images.len(), 2);
        assert!(images.contains(&vec![0, 1]));
        assert!(images.contains(&vec![0, 0]));
    }

    #[test]
    fn lemma_holds_on_simple_instances() {
        let table: Vec<usize> = (0..16).map(|i| (i / 4 + i % 4) % 4).collect();
        let a = alg(4, vec![Operation::new("add", 2, table.clone())]);
        let id = PreorderRel::identity(4);
        let total = PreorderRel::total(4);
        assert!(verify_freezification_lemma(&a, &id, 2, &table).unwrap());
        assert!(verify_freezification_lemma(&a, &total, 2, &table).unwrap());
    }
}
