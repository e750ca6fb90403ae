//! Direct construction of character tables of abelian groups. A basis
//! realizing the group as an internal direct sum of cyclic subgroups is
//! found by quotient recursion, discrete logarithms are read off an
//! odometer sweep, and every character value is then a single root of
//! unity — no eigenvector computation is needed, which matters for large
//! cyclic groups where the class count equals the group order.

use group_engine::{quotient_group, ClassData, Group, Perm};

use crate::cyclo::{CycValue, Reducer};
use crate::modl::Fl;
use crate::table::RawTable;
use crate::CharTableError;

/// A list of independent generators whose cyclic spans decompose the
/// abelian group as a direct sum; orders form a divisibility chain,
/// largest first.
pub fn abelian_basis(g: &Group) -> Result<Vec<Perm>, CharTableError> {
    if !g.is_abelian() {
        return Err(CharTableError::Internal(
            "abelian basis requested for a non-abelian group".into(),
        ));
    }
    if g.is_trivial() {
        return Ok(Vec::new());
    }
    // any element of maximal order generates a direct summand
    let exp = g.exponent();
    let a = g
        .elements()
        .iter()
        .find(|p| p.order() == exp)
        .expect("an abelian group attains its exponent")
        .clone();
    let cyc = g.subgroup_closure(std::slice::from_ref(&a))?;
    if cyc.order() == g.order() {
        return Ok(vec![a]);
    }
    let q = quotient_group(g, &cyc)?;
    let mut basis = vec![a.clone()];
    for bbar in abelian_basis(&q.group)? {
        let m = bbar.order();
        let b = g.element(q.preimage_rep(&bbar)).clone();
        // b^m lies in <a>, say b^m = a^s; maximality of ord(a) forces m | s,
        // so b * a^(-s/m) is a preimage of bbar of exact order m
        let target = b.pow(m as i64);
        let mut s = 0u64;
        let mut cur = g.identity();
        while cur != target {
            cur = cur.compose(&a);
            s += 1;
            if s == exp {
                return Err(CharTableError::Internal(
                    "power of lifted generator escaped the cyclic summand".into(),
                ));
            }
        }
        if s % m != 0 {
            return Err(CharTableError::Internal(
                "maximal-order divisibility failed in basis lift".into(),
            ));
        }
        let corrected = b.compose(&a.pow(-((s / m) as i64)));
        debug_assert_eq!(corrected.order(), m);
        basis.push(corrected);
    }
    Ok(basis)
}

/// Full table data for an abelian group over the prime field chosen by the
/// caller: degrees are all 1, each value is a single root of unity, and the
/// per-class eigenvalue multiset is that root with multiplicity one.
pub(crate) fn raw_table(
    g: &Group,
    cd: &ClassData,
    red: &Reducer,
    f: Fl,
    omega: u64,
) -> Result<RawTable, CharTableError> {
    let k = cd.count();
    let order = g.order();
    if k as u64 != order {
        return Err(CharTableError::Internal(
            "abelian group produced non-singleton classes".into(),
        ));
    }
    let n = red.n;
    debug_assert_eq!(n, g.exponent());
    let basis = abelian_basis(g)?;
    let orders: Vec<u64> = basis.iter().map(|b| b.order()).collect();
    if orders.iter().product::<u64>() != order {
        return Err(CharTableError::Internal(
            "basis orders do not multiply to the group order".into(),
        ));
    }
    let r = basis.len();
    let powtab: Vec<Vec<Perm>> = basis
        .iter()
        .map(|b| {
            let mut v = Vec::with_capacity(b.order() as usize);
            let mut cur = g.identity();
            for _ in 0..b.order() {
                v.push(cur.clone());
                cur = cur.compose(b);
            }
            v
        })
        .collect();

    // discrete logarithm of every element, by sweeping all digit tuples
    let mut dlog = vec![vec![0u32; r]; order as usize];
    let mut digits = vec![0u32; r];
    loop {
        let mut e = g.identity();
        for (i, &d) in digits.iter().enumerate() {
            e = e.compose(&powtab[i][d as usize]);
        }
        let idx = g.element_index(&e).expect("product of generators stays in the group");
        dlog[idx as usize] = digits.clone();
        let mut i = 0;
        while i < r {
            digits[i] += 1;
            if (digits[i] as u64) < orders[i] {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
        if i == r {
            break;
        }
    }

    let rep_dlog: Vec<Vec<u32>> = (0..k)
        .map(|j| dlog[cd.classes[j].rep_index as usize].clone())
        .collect();
    // exponent weight of basis slot i: zeta_(m_i) = zeta_n^(n / m_i)
    let weights: Vec<u64> = orders.iter().map(|&m| n / m).collect();
    let root_cache: Vec<CycValue> = (0..n).map(|e| CycValue::root(red, e)).collect();
    let mut omega_pow = vec![1u64; n as usize];
    for e in 1..n as usize {
        omega_pow[e] = f.mul(omega_pow[e - 1], omega);
    }

    let mut values = Vec::with_capacity(k);
    let mut multisets = Vec::with_capacity(k);
    let mut rows_modl = Vec::with_capacity(k);
    let mut tdig = vec![0u32; r];
    loop {
        let mut vrow = Vec::with_capacity(k);
        let mut mrow = Vec::with_capacity(k);
        let mut lrow = Vec::with_capacity(k);
        for dl in &rep_dlog {
            let mut e: u64 = 0;
            for i in 0..r {
                e = (e + (tdig[i] as u64 * dl[i] as u64 % n) * weights[i]) % n;
            }
            vrow.push(root_cache[e as usize].clone());
            mrow.push(vec![(e as u32, 1u32)]);
            lrow.push(omega_pow[e as usize]);
        }
        values.push(vrow);
        multisets.push(mrow);
        rows_modl.push(lrow);
        let mut i = 0;
        while i < r {
            tdig[i] += 1;
            if (tdig[i] as u64) < orders[i] {
                break;
            }
            tdig[i] = 0;
            i += 1;
        }
        if i == r {
            break;
        }
    }
    debug_assert_eq!(values.len(), k);

    Ok(RawTable {
        degrees: vec![1; k],
        rows_modl,
        values,
        multisets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use group_engine::{cyclic, direct_product};

    #[test]
    fn basis_of_cyclic_group_is_one_generator() {
        let g = cyclic(12).unwrap();
        let b = abelian_basis(&g).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!(b[0].order(), 12);
    }

    #[test]
    fn basis_of_klein_four_group() {
        let c2 = cyclic(2).unwrap();
        let v4 = direct_product(&[c2.clone(), c2]).unwrap();
        let b = abelian_basis(&v4).unwrap();
        assert_eq!(b.iter().map(|p| p.order()).collect::<Vec<_>>(), vec![2, 2]);
    }

    #[test]
    fn basis_orders_form_divisibility_chain() {
        // C2 x C4 x C3 ≅ C12 x C2: invariant factors 12, 2
        let g = direct_product(&[
            cyclic(2).unwrap(),
            cyclic(4).unwrap(),
            cyclic(3).unwrap(),
        ])
        .unwrap();
        let b = abelian_basis(&g).unwrap();
        let orders: Vec<u64> = b.iter().map(|p| p.order()).collect();
        assert_eq!(orders, vec![12, 2]);
        for w in orders.windows(2) {
            assert_eq!(w[0] % w[1], 0, "orders must divide down the chain");
        }
        assert_eq!(orders.iter().product::<u64>(), g.order());
    }

    #[test]
    fn basis_of_elementary_abelian() {
        let c3 = cyclic(3).unwrap();
        let g = direct_product(&[c3.clone(), c3.clone(), c3]).unwrap();
        let b = abelian_basis(&g).unwrap();
        assert_eq!(b.iter().map(|p| p.order()).collect::<Vec<_>>(), vec![3, 3, 3]);
    }

    #[test]
    fn trivial_group_has_empty_basis() {
        let g = cyclic(1).unwrap();
        assert!(abelian_basis(&g).unwrap().is_empty());
    }
}
