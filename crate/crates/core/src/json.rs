//! Small helpers for the stable JSON output.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::Value;

/// Integers that fit in `i64` are emitted as JSON numbers, larger ones as strings.
pub fn bigint_value(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(c.to_string()),
    }
}
