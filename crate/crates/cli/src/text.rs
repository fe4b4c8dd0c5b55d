use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};
use subproj_core::PresentedModule;

/// `0`, `Z`, `Z/2 ⊕ Z/4`, ...
pub fn describe(m: &PresentedModule) -> String {
    let f = m.invariant_factors();
    if f.is_empty() {
        return "0".into();
    }
    f.iter().map(factor).collect::<Vec<_>>().join(" ⊕ ")
}

fn factor(d: &BigInt) -> String {
    if d.is_zero() {
        "Z".into()
    } else {
        format!("Z/{d}")
    }
}

pub fn module_summary(m: &PresentedModule) -> Value {
    json!({
        "invariant_factors": m.invariant_factors().iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "description": describe(m),
    })
}
