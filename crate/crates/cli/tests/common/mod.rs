#![allow(dead_code)]

use chowkit_cli::Expr;
use num_bigint::BigInt;
use proptest::prelude::*;

/// Expression trees the parser can produce: nonnegative literals and
/// variables `h1..h4` at the leaves.
pub fn expr_tree() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        (1usize..=4).prop_map(Expr::Var),
        (0u32..200).prop_map(|n| Expr::Int(BigInt::from(n))),
    ];
    leaf.prop_recursive(5, 48, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::Mul(Box::new(a), Box::new(b))),
            inner.clone().prop_map(|a| Expr::Neg(Box::new(a))),
            (inner, 0u32..6).prop_map(|(a, e)| Expr::Pow(Box::new(a), e)),
        ]
    })
}

/// Parse, print, parse again: the two trees must agree.
pub fn check_round_trip(tree: &Expr) -> Result<(), TestCaseError> {
    let printed = tree.to_string();
    let reparsed = chowkit_cli::parse(&printed)
        .map_err(|e| TestCaseError::fail(format!("{printed:?}: {e}")))?;
    prop_assert_eq!(&reparsed, tree, "printed as {}", printed);
    prop_assert_eq!(reparsed.to_string(), printed);
    Ok(())
}
