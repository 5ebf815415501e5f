use arrowsimp_web::*;

#[test]
fn paley7_walkthrough() {
    let trn = generate("paley", 7, 0).unwrap();
    assert!(trn.starts_with("7\n0110100\n"));

    let v = view(&trn).unwrap();
    assert_eq!(v.matrix.len(), 49);
    assert_eq!(&v.matrix[..7], &[0, 1, 1, 0, 1, 0, 0]);
    assert!(v.doubly_regular);
    assert_eq!(v.regularity, "regular");

    let a = analyze(&trn).unwrap();
    assert!(a.exact && a.simple);
    assert_eq!((a.s, a.arcs.len()), (3, 3));

    let e = delete_and_extend(&trn, 2).unwrap();
    assert_eq!(e.s, 2);
    let ext = e.extended.unwrap();
    assert!(view(&ext).unwrap().doubly_regular);

    let h = hadamard(&trn).unwrap();
    assert_eq!(h.len(), 64);
    assert!(h[..8].iter().all(|&x| x == 1));
}

#[test]
fn errors_are_messages() {
    assert!(generate("paley", 5, 0).unwrap_err().contains("3 mod 4"));
    assert!(generate("nope", 5, 0).is_err());
    let r = generate("random", 6, 1).unwrap();
    assert!(hadamard(&r).is_err());
    assert!(delete_and_extend(&r, 9).is_err());
    let e = delete_and_extend(&generate("random", 7, 3).unwrap(), 0).unwrap();
    assert!(e.extended.is_none() && e.reason.is_some());
    assert!(analyze("2\n01\n").is_err());
}

#[test]
fn large_inputs_fall_back_to_bounds() {
    let a = analyze(&generate("paley", 23, 0).unwrap()).unwrap();
    assert!(!a.exact);
    assert_eq!(a.s, 11);
    assert_eq!(a.arcs.len(), a.s);
}

#[test]
fn json_shape() {
    let a = analyze(&generate("paley", 7, 0).unwrap()).unwrap();
    let json = serde_json::to_value(&a).unwrap();
    assert_eq!(json["arcs"].as_array().unwrap().len(), 3);
    assert!(json["module"].is_array());
}
