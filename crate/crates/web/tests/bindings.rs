use indom_web::{analyze_graph6_json, expansion_roots_json, family_polynomial_json};

#[test]
fn friendship_roots_leave_the_real_line() {
    let v = family_polynomial_json("friendship", 3, 0).unwrap();
    assert_eq!(v["polynomial"], "x + 8x^3");
    assert_eq!(v["real_rooted"], false);
    assert_eq!(v["roots"].as_array().unwrap().len(), 3);
    assert_eq!(v["graph"], "friendship(3)");
}

#[test]
fn two_parameter_families() {
    let v = family_polynomial_json("generalized_friendship", 4, 2).unwrap();
    assert_eq!(v["polynomial"], "3x^3 + x^4");
    let v = family_polynomial_json("generalized_book", 2, 5).unwrap();
    assert_eq!(v["polynomial"], "x^2 + 6x^3");
    let v = family_polynomial_json("complete_multipartite", 2, 3).unwrap();
    assert_eq!(v["polynomial"], "x^2 + x^3");
}

#[test]
fn analyze_single_edge() {
    let v = analyze_graph6_json("A_").unwrap();
    assert_eq!(v["polynomial"], "2x");
    assert_eq!(v["gamma_i"], 1);
    assert_eq!(v["well_covered"], true);
}

#[test]
fn minimal_expansion_of_a_path() {
    // D_i(P_6) = x^2 + 4x^3 is already nondecreasing
    let v = expansion_roots_json("EhCG", 0).unwrap();
    assert_eq!(v["r"], "1");
    assert_eq!(v["within_unit_disk"], true);
    // D_i(P_5) = 3x^2 + x^3 needs r = 3
    let v = expansion_roots_json("DhC", 0).unwrap();
    assert_eq!(v["r"], "3");
    assert_eq!(v["within_unit_disk"], true);
    let v = expansion_roots_json("DhC", 1).unwrap();
    assert_eq!(v["within_unit_disk"], false);
}

#[test]
fn errors_are_messages() {
    assert!(family_polynomial_json("cycle", 2, 0).is_err());
    assert!(family_polynomial_json("path", 41, 0).unwrap_err().contains("40"));
    assert!(analyze_graph6_json("!!").is_err());
    assert!(expansion_roots_json("Cs", 0).unwrap_err().contains("coefficient"));
}

#[test]
fn coefficients_are_decimal_strings() {
    let v = family_polynomial_json("path", 3, 0).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!(["0", "1", "1"]));
}
