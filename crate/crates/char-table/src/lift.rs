//! Reconstruction of exact character values from modular residues. On the
//! cyclic group generated by a class representative of order d, a character
//! restricts to a nonnegative integer combination of d-th roots of unity
//! whose multiplicities sum to the degree; sampling the residues along the
//! power classes and applying an inverse DFT of length d recovers those
//! multiplicities exactly, because each lies in [0, degree] and the working
//! prime exceeds twice the largest degree.

use group_engine::{ClassData, Group};

use crate::cyclo::{CycValue, Reducer};
use crate::dixon::ModularTable;
use crate::modl::{inverse_dft, Fl};
use crate::table::RawTable;
use crate::CharTableError;

/// The eigenvalue multiset of one table entry: sorted pairs
/// (exponent of zeta_n, multiplicity) with multiplicities summing to the
/// row degree.
pub type EigenMultiset = Vec<(u32, u32)>;

/// pc[j][t] = class index of rep_j^t, for t in 0..order(rep_j).
pub fn power_classes(g: &Group, cd: &ClassData) -> Vec<Vec<u32>> {
    (0..cd.count())
        .map(|j| {
            let rep = &cd.classes[j].rep;
            let d = cd.classes[j].element_order as usize;
            let mut cur = g.identity();
            let mut pc = Vec::with_capacity(d);
            for _ in 0..d {
                let idx = g.element_index(&cur).expect("powers stay in the group");
                pc.push(cd.class_of[idx as usize]);
                cur = cur.compose(rep);
            }
            pc
        })
        .collect()
}

/// Lift every row of a modular table to exact cyclotomic values.
pub(crate) fn lift_table(
    g: &Group,
    cd: &ClassData,
    mt: &ModularTable,
    red: &Reducer,
    f: Fl,
    omega: u64,
) -> Result<RawTable, CharTableError> {
    let k = cd.count();
    let n = red.n;
    let pcs = power_classes(g, cd);
    let mut values = Vec::with_capacity(mt.rows_modl.len());
    let mut multisets = Vec::with_capacity(mt.rows_modl.len());
    for (row, &degree) in mt.rows_modl.iter().zip(&mt.degrees) {
        let mut vrow = Vec::with_capacity(k);
        let mut mrow = Vec::with_capacity(k);
        for pc in &pcs {
            let d = pc.len() as u64;
            debug_assert_eq!(n % d, 0);
            let w = f.pow(omega, n / d);
            let samples: Vec<u64> = pc.iter().map(|&c| row[c as usize]).collect();
            let mults = inverse_dft(&samples, w, f);
            let mut ms: EigenMultiset = Vec::new();
            let mut total = 0u64;
            for (e, &m) in mults.iter().enumerate() {
                if m == 0 {
                    continue;
                }
                if m > degree {
                    return Err(CharTableError::Internal(format!(
                        "eigenvalue multiplicity {m} exceeds degree {degree}"
                    )));
                }
                total += m;
                // zeta_d^e = zeta_n^(e n / d); e ascending keeps this sorted
                ms.push(((e as u64 * (n / d) % n) as u32, m as u32));
            }
            if total != degree {
                return Err(CharTableError::Internal(format!(
                    "eigenvalue multiplicities sum to {total}, expected degree {degree}"
                )));
            }
            vrow.push(CycValue::from_terms(
                red,
                ms.iter().map(|&(e, m)| (e as u64, m as i64)),
            ));
            mrow.push(ms);
        }
        values.push(vrow);
        multisets.push(mrow);
    }
    Ok(RawTable {
        degrees: mt.degrees.clone(),
        rows_modl: mt.rows_modl.clone(),
        values,
        multisets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use group_engine::conjugacy_classes;
    use group_engine::sym;

    #[test]
    fn power_classes_of_sym3() {
        let g = sym(3).unwrap();
        let cd = conjugacy_classes(&g);
        let pcs = power_classes(&g, &cd);
        // classes sorted by element order: identity, transpositions, 3-cycles
        assert_eq!(pcs[0], vec![0]);
        assert_eq!(pcs[1], vec![0, 1]);
        assert_eq!(pcs[2], vec![0, 2, 2]);
    }
}
