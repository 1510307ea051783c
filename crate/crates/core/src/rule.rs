//! Integer codes for 2-state, 9-neighbor totalistic rules.
//!
//! A rule maps the sum of a 3x3 block (0..=9) to the next cell state. The
//! code packs the ten outputs as `sum(outputs[n] << n)`, so bit 0 answers
//! for an empty neighborhood and bit 9 for a full one.

use std::fmt;

use crate::error::{Error, Result};

/// Number of cell states. Only binary rules are supported.
pub const STATES: u32 = 2;

/// Number of distinct neighborhood sums (0..=9).
pub const SUM_COUNT: usize = 10;

/// Size of the rule space, `2^10`.
pub const RULE_SPACE_SIZE: u32 = 1 << SUM_COUNT;

/// Largest valid rule code.
pub const MAX_RULE_CODE: u32 = RULE_SPACE_SIZE - 1;

/// A totalistic rule over the 9-cell Moore neighborhood.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TotalisticRule {
    code: u16,
}

impl TotalisticRule {
    /// Decodes a rule code in `0..=1023`.
    pub fn from_code(code: u32) -> Result<Self> {
        if code > MAX_RULE_CODE {
            return Err(Error::OutOfRange {
                what: "rule code",
                value: code as i64,
                min: 0,
                max: MAX_RULE_CODE as i64,
            });
        }
        Ok(Self { code: code as u16 })
    }

    /// Builds a rule from its output table, indexed by neighborhood sum.
    pub fn from_outputs(outputs: &[u8]) -> Result<Self> {
        if outputs.len() != SUM_COUNT {
            return Err(Error::invalid(
                "output table",
                format!("expected {SUM_COUNT} entries, got {}", outputs.len()),
            ));
        }
        let mut code = 0u16;
        for (n, &bit) in outputs.iter().enumerate() {
            match bit {
                0 => {}
                1 => code |= 1 << n,
                other => {
                    return Err(Error::invalid(
                        "output table",
                        format!("entry for sum {n} is {other}, expected 0 or 1"),
                    ))
                }
            }
        }
        Ok(Self { code })
    }

    /// Builds the rule that fires exactly on the given sums.
    pub fn from_active_sums(sums: &[u8]) -> Result<Self> {
        let mut outputs = [0u8; SUM_COUNT];
        for &s in sums {
            if s as usize >= SUM_COUNT {
                return Err(Error::OutOfRange {
                    what: "neighborhood sum",
                    value: s as i64,
                    min: 0,
                    max: 9,
                });
            }
            outputs[s as usize] = 1;
        }
        Self::from_outputs(&outputs)
    }

    pub fn code(self) -> u32 {
        self.code as u32
    }

    /// The ten outputs, index `n` answering for neighborhood sum `n`.
    pub fn outputs(self) -> [u8; SUM_COUNT] {
        let mut out = [0u8; SUM_COUNT];
        for (n, slot) in out.iter_mut().enumerate() {
            *slot = ((self.code >> n) & 1) as u8;
        }
        out
    }

    /// Next state for a neighborhood sum. Sums above 9 cannot occur.
    pub fn output(self, total: u32) -> Result<u8> {
        if total as usize >= SUM_COUNT {
            return Err(Error::OutOfRange {
                what: "neighborhood sum",
                value: total as i64,
                min: 0,
                max: 9,
            });
        }
        Ok(self.fires(total as usize) as u8)
    }

    #[inline]
    pub(crate) fn fires(self, total: usize) -> bool {
        (self.code >> total) & 1 == 1
    }

    /// Sums that produce an occupied cell, ascending.
    pub fn active_sums(self) -> Vec<u8> {
        (0..SUM_COUNT as u8).filter(|&n| self.fires(n as usize)).collect()
    }

    /// Ten-character binary form, sum 9 first (816 reads `1100110000`).
    pub fn binary(self) -> String {
        format!("{:010b}", self.code)
    }

    /// Single-line human-readable description.
    pub fn render(self) -> String {
        let sums: Vec<String> = self.active_sums().iter().map(u8::to_string).collect();
        format!(
            "rule {} binary {} active {{{}}}",
            self.code,
            self.binary(),
            sums.join(",")
        )
    }

    /// Every rule in code order.
    pub fn all() -> impl Iterator<Item = TotalisticRule> {
        (0..RULE_SPACE_SIZE as u16).map(|code| TotalisticRule { code })
    }
}

impl fmt::Display for TotalisticRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Decodes `code` into a rule.
pub fn decode_rule(code: u32) -> Result<TotalisticRule> {
    TotalisticRule::from_code(code)
}

/// Packs an output table back into its code.
pub fn encode_rule(outputs: &[u8]) -> Result<u32> {
    TotalisticRule::from_outputs(outputs).map(TotalisticRule::code)
}

pub fn rule_output(rule: TotalisticRule, total: u32) -> Result<u8> {
    rule.output(total)
}

pub fn render_rule(rule: TotalisticRule) -> String {
    rule.render()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn active(code: u32) -> Vec<u8> {
        decode_rule(code).unwrap().active_sums()
    }

    #[test]
    fn named_rules_decode_to_their_active_sums() {
        assert_eq!(active(816), vec![4, 5, 8, 9]);
        assert_eq!(active(0), Vec::<u8>::new());
        assert_eq!(active(512), vec![9]);
        assert_eq!(active(688), vec![4, 5, 7, 9]);
        assert_eq!(active(944), vec![4, 5, 7, 8, 9]);
        assert_eq!(active(960), vec![6, 7, 8, 9]);
    }

    #[test]
    fn out_of_range_code_names_valid_range() {
        let err = decode_rule(1024).unwrap_err();
        assert!(err.to_string().contains("0..=1023"), "{err}");
        assert!(decode_rule(u32::MAX).is_err());
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode_rule(&[0, 0, 0, 0, 1, 1, 0, 0, 1, 1]).unwrap(), 816);
        assert_eq!(encode_rule(&[0; 10]).unwrap(), 0);
        assert_eq!(encode_rule(&[1; 10]).unwrap(), 1023);
    }

    #[test]
    fn encode_rejects_malformed_tables() {
        assert!(matches!(
            encode_rule(&[0; 9]),
            Err(Error::Invalid { .. })
        ));
        assert!(matches!(
            encode_rule(&[0, 0, 2, 0, 0, 0, 0, 0, 0, 0]),
            Err(Error::Invalid { .. })
        ));
    }

    #[test]
    fn rule_output_examples() {
        let r816 = decode_rule(816).unwrap();
        assert_eq!(rule_output(r816, 9).unwrap(), 1);
        assert_eq!(rule_output(r816, 0).unwrap(), 0);
        let r0 = decode_rule(0).unwrap();
        assert!((0..10).all(|t| rule_output(r0, t).unwrap() == 0));
        assert!(rule_output(r816, 10).is_err());
    }

    #[test]
    fn render_examples() {
        assert!(render_rule(decode_rule(816).unwrap()).contains("1100110000"));
        assert!(render_rule(decode_rule(0).unwrap()).contains("0000000000"));
        assert!(render_rule(decode_rule(1023).unwrap()).contains("1111111111"));
        assert_eq!(
            decode_rule(816).unwrap().render(),
            "rule 816 binary 1100110000 active {4,5,8,9}"
        );
    }

    #[test]
    fn roundtrip_and_bit_correspondence_over_whole_space() {
        let mut seen = std::collections::HashSet::new();
        for code in 0..RULE_SPACE_SIZE {
            let rule = decode_rule(code).unwrap();
            let outputs = rule.outputs();
            for (n, &bit) in outputs.iter().enumerate() {
                assert_eq!(bit as u32, (code >> n) & 1);
            }
            assert_eq!(encode_rule(&outputs).unwrap(), code);
            assert!(seen.insert(outputs));
        }
        assert_eq!(TotalisticRule::all().count(), 1024);
        assert_eq!(RULE_SPACE_SIZE, 1024);
        assert_eq!(STATES.pow(SUM_COUNT as u32), RULE_SPACE_SIZE);
    }
}
