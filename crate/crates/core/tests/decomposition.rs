use descendent::decomposition::{parse_basis_key, WORKING_ORDER};
use descendent::rational::{int, rat};
use descendent::*;
use num_bigint::BigInt;

#[test]
fn first_row_leading_coefficient() {
    let basis = parse_basis_key(12, "1234567").unwrap();
    let d = solve_linear(&basis, &discriminant(WORKING_ORDER).unwrap(), 12).unwrap();
    assert_eq!(d.coefficients[0], rat(-23011579448, 8209));
    assert_eq!(d.scale, BigInt::from(8209));
    assert_eq!(d.key.as_deref(), Some("1234567"));
    assert_eq!(d.reconstruct(30), discriminant(30).unwrap());
}

#[test]
fn named_rows() {
    let all = all_positive_decompositions(12).unwrap();
    assert_eq!(all.len(), 36);
    let find = |k: &str| all.iter().find(|d| d.key.as_deref() == Some(k)).unwrap();
    assert_eq!(find("1234578").scale, BigInt::from(24447));
    assert_eq!(find("2345678").scale, BigInt::from(2220683));
    let row = find("3456789");
    assert_eq!(row.scale, BigInt::from(128918288));
    let i = row.basis.iter().position(|b| b.insertions() == [6, 2]).unwrap();
    assert_eq!(row.scaled_coefficients()[i], BigInt::from(-2768257476294072i64));
    // lexicographic basis order
    let keys: Vec<&str> = all.iter().map(|d| d.key.as_deref().unwrap()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn dependent_basis_is_rejected() {
    let m = descendent_matroid(12, false).unwrap();
    let bases = m.bases();
    let dependent = descendent::matroid::Combinations::new(m.size(), 7)
        .find(|c| !bases.contains(c))
        .unwrap();
    let labels: Vec<DescendentLabel> = dependent.iter().map(|&i| m.labels()[i].clone()).collect();
    let err = solve_linear(&labels, &discriminant(WORKING_ORDER).unwrap(), 12).unwrap_err();
    assert!(matches!(err, Error::Singular { .. }), "{err}");
}

#[test]
fn solve_linear_preconditions() {
    let basis = parse_basis_key(12, "1234567").unwrap();
    assert!(matches!(
        solve_linear(&basis[..6], &discriminant(25).unwrap(), 12),
        Err(Error::CoefficientCount { expected: 7, got: 6 })
    ));
    assert!(matches!(
        solve_linear(&basis, &discriminant(12).unwrap(), 12),
        Err(Error::InsufficientOrder { have: 12, need: 17 })
    ));
    // E4^3 is not Δ: the leading solve succeeds but later coefficients disagree
    let e4 = eisenstein_series(4, 25).unwrap();
    let cube = e4.pow(3).unwrap();
    let fit = solve_linear(&basis, &cube, 12).unwrap();
    assert_eq!(fit.reconstruct(25), cube);
    assert!(all_positive_decompositions(10).is_err());
}

#[test]
fn polynomial_types_reconstruct() {
    let lead = discriminant(6).unwrap().coeffs().to_vec();
    let order = 2 * 7 + 5;
    for t in 1..=8 {
        let p = poly_basis_expand(t, 12, &lead).unwrap();
        assert_eq!(p.reconstruct(order), discriminant(order).unwrap(), "type {t}");
        for (factors, _) in &p.terms {
            assert_eq!(factors.iter().map(|f| f.weight()).sum::<u32>(), 12);
        }
    }
    let p1 = poly_basis_expand(1, 12, &lead).unwrap();
    let t02 = DescendentLabel::new(vec![0, 0]);
    assert_eq!(p1.coefficient(&[t02.clone(), t02.clone(), t02]), int(13824));
    let p8 = poly_basis_expand(8, 12, &lead).unwrap();
    let f = |v: &[u32]| DescendentLabel::new(v.to_vec());
    assert_eq!(p8.coefficient(&[f(&[4]), f(&[2]), f(&[0])]), int(38102400));
    assert!(matches!(poly_basis_expand(9, 12, &lead), Err(Error::InvalidTripleType(9))));
}

#[test]
fn tau_examples() {
    let all = all_positive_decompositions(12).unwrap();
    assert_eq!(tau_pentagonal(1, &all[0]).unwrap(), BigInt::from(1));
    assert_eq!(tau_pentagonal(2, &all[0]).unwrap(), BigInt::from(-24));
    assert_eq!(tau_pentagonal(6, &all[5]).unwrap(), BigInt::from(-6048));
    assert_eq!(tau_niebur(3), BigInt::from(252));
    assert_eq!(tau_direct(4).unwrap(), BigInt::from(-1472));
    assert_eq!(tau_direct(4).unwrap(), tau_niebur(2) * tau_niebur(2) - BigInt::from(2048));
}

#[test]
fn relation_report() {
    let r = tau_relation_report(30).unwrap();
    assert!(r.is_clean());
    assert!(r.hecke_cases.contains(&(2, 3)));
    assert!(r.hecke_cases.contains(&(3, 2)));
    assert!(r.hecke_cases.contains(&(5, 1)));
    let json = serde_json::to_value(&r).unwrap();
    assert_eq!(json["max_d"], 30);
}

#[test]
fn decomposition_json_and_text() {
    let all = all_positive_decompositions(12).unwrap();
    let v = serde_json::to_value(&all[0]).unwrap();
    assert_eq!(v["key"], "1234567");
    assert_eq!(v["scale"], "8209");
    assert_eq!(v["scaled_coefficients"][0], "-23011579448");
    assert_eq!(v["basis"][0], serde_json::json!([10]));
    assert!(all[0].to_string().starts_with("8209*Delta = -23011579448*[10] + 90651811166*[7, 1]"));
}
