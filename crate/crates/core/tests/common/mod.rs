use std::sync::OnceLock;

use critline::zeros_table::{load_zeros, ZeroTable, BUNDLED_TABLE};

/// The bundled zero table, loaded once per test binary.
pub fn table() -> &'static ZeroTable {
    static TABLE: OnceLock<ZeroTable> = OnceLock::new();
    TABLE.get_or_init(|| load_zeros(BUNDLED_TABLE.as_ref()).expect("bundled zero table"))
}
