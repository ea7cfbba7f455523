use crate::error::{Error, Result};

/// Lowercase hex, zero-padded to whole bytes for a value of `nbits` bits.
pub fn format_hex(bits: u64, nbits: u32) -> String {
    let width = (nbits.max(1) as usize).div_ceil(8) * 2;
    format!("{bits:0width$x}")
}

/// Strict hex parser: no `0x` prefix, no sign, case-insensitive digits.
pub fn parse_hex(s: &str) -> Result<u64> {
    let s = s.trim();
    if s.is_empty() || !s.chars().all(|c| c.is_ascii_hexdigit()) {
        return Err(Error::Parse(format!("invalid hex value {s:?}")));
    }
    u64::from_str_radix(s, 16).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
}
