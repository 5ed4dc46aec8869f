//! Built-in presentation presets used by the CLI and the test suites.

use crate::error::{Error, Result};
use crate::presentation::{from_mapping_class, tau_zeta_automorphism, trivial_cylinder, AdmissiblePresentation};
use crate::stringlink::{from_string_link, StringLinkData};
use crate::word::Word;

/// A 2-strand pure string link with the crossing data of the M_L example:
/// strand 1 runs through arcs (bottom, middle, top), strand 2 through
/// (bottom, top); three crossings.
pub fn eg4_string_link() -> StringLinkData {
    // arc ids: 1 = i₋-side meridian of strand 1, 2 = middle arc,
    // 3 = i₊-side meridian of strand 1, 4/5 = strand 2 meridians
    StringLinkData::new(
        2,
        vec![vec![1, 2, 3], vec![4, 5]],
        vec![
            // over · in · over⁻¹ · out⁻¹ and cyclic/inverse variants, as
            // read off the diagram
            Word::from_letters([5, 1, -5, -2]),
            Word::from_letters([1, -3, -1, 2]),
            Word::from_letters([4, -2, -5, 2]),
        ],
    )
}

/// The string-link cylinder M_L of the worked 2-strand example (genus 2,
/// one auxiliary generator).
pub fn eg4() -> AdmissiblePresentation {
    from_string_link(&eg4_string_link()).expect("eg4 string link data is valid")
}

/// The boundary Dehn twist cylinder at genus 1.
pub fn tau_zeta() -> AdmissiblePresentation {
    from_mapping_class(&tau_zeta_automorphism(1)).expect("tau_zeta is 2-connected")
}

/// A separating-curve twist at genus 2: conjugates γ₁, γ₃ by c = [γ₁,γ₃],
/// fixes γ₂, γ₄. Acts trivially on homology.
pub fn tau_sep() -> AdmissiblePresentation {
    let c = Word::commutator(&Word::gen(1), &Word::gen(3));
    let ci = c.inverse();
    let conj = |i: i32| ci.mul(&Word::gen(i)).mul(&c);
    let phi = crate::word::Endomorphism::new(
        4,
        vec![conj(1), Word::gen(2), conj(3), Word::gen(4)],
    )
    .expect("valid endomorphism");
    from_mapping_class(&phi).expect("tau_sep is 2-connected")
}

/// The trivial g-strand string link, via the string-link construction.
pub fn stringlink_trivial(genus: usize) -> AdmissiblePresentation {
    let strands = (1..=genus).map(|j| vec![j]).collect();
    from_string_link(&StringLinkData::new(genus, strands, vec![]))
        .expect("trivial string link is valid")
}

/// Named preset lookup for the CLI. `genus` applies to the parametrized
/// presets and is ignored by the fixed ones.
pub fn preset(name: &str, genus: usize) -> Result<AdmissiblePresentation> {
    match name {
        "trivial" => Ok(trivial_cylinder(genus)),
        "tauzeta" => Ok(tau_zeta()),
        "tausep" => Ok(tau_sep()),
        "eg4" => Ok(eg4()),
        "sl-trivial" => Ok(stringlink_trivial(genus)),
        _ => Err(Error::Parse {
            line: 0,
            msg: format!(
                "unknown preset '{}' (available: trivial, tauzeta, tausep, eg4, sl-trivial)",
                name
            ),
        }),
    }
}

pub const PRESET_NAMES: [&str; 5] = ["trivial", "tauzeta", "tausep", "eg4", "sl-trivial"];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_preset_validates() {
        for name in PRESET_NAMES {
            let p = preset(name, 2).unwrap();
            p.validate()
                .unwrap_or_else(|e| panic!("preset {} failed validation: {}", name, e));
        }
        assert!(preset("nope", 1).is_err());
    }
}
