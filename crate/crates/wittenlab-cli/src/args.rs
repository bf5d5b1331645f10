//! Value parsers for the command-line flags. Each returns a message that
//! clap prefixes with the offending flag, so usage errors name the field.

use std::collections::BTreeMap;
use wittenlab::numerics::rational::{parse_rational, rational_grid};
use wittenlab::numerics::Rational;
use wittenlab::verify::Tolerances;

/// Smallest accepted Galerkin basis size.
pub const MIN_BASIS_SIZE: usize = 8;

/// `-K`: a basis size of at least [`MIN_BASIS_SIZE`].
pub fn basis_size(text: &str) -> Result<usize, String> {
    let k: usize = text.trim().parse().map_err(|_| format!("`{text}` is not a non-negative integer"))?;
    if k < MIN_BASIS_SIZE {
        return Err(format!("basis size must be at least {MIN_BASIS_SIZE}, got {k}"));
    }
    Ok(k)
}

/// The `--s` grid: positive, finite, strictly ascending scales.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleGrid(pub Vec<f64>);

pub fn scale_grid(text: &str) -> Result<ScaleGrid, String> {
    let mut out = Vec::new();
    for item in text.split(',') {
        let s: f64 = item.trim().parse().map_err(|_| format!("`{}` is not a number", item.trim()))?;
        if !(s.is_finite() && s > 0.0) {
            return Err(format!("scales must be positive, got {s}"));
        }
        if out.last().is_some_and(|&prev| s <= prev) {
            return Err(format!("scales must be strictly ascending, {s} follows {}", out[out.len() - 1]));
        }
        out.push(s);
    }
    Ok(ScaleGrid(out))
}

/// A rational given as `p/q` or `p`; floats are refused.
pub fn rational(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

/// `--grid kappa=a:b:step,u=a:b:step` with rational endpoints and steps.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionGrid {
    pub kappa: Vec<Rational>,
    pub u: Vec<Rational>,
}

pub fn region_grid(text: &str) -> Result<RegionGrid, String> {
    let mut axes = BTreeMap::new();
    for part in text.split(',') {
        let (name, range) = part
            .split_once('=')
            .ok_or_else(|| format!("`{part}` is not of the form name=start:end:step"))?;
        let name = name.trim();
        if name != "kappa" && name != "u" {
            return Err(format!("unknown grid axis `{name}` (expected kappa and u)"));
        }
        let pieces: Vec<&str> = range.split(':').collect();
        let [start, end, step] = pieces[..] else {
            return Err(format!("{name}: `{range}` is not of the form start:end:step"));
        };
        let parse = |t: &str| parse_rational(t).map_err(|e| format!("{name}: {e}"));
        let values = rational_grid(&parse(start)?, &parse(end)?, &parse(step)?).map_err(|e| format!("{name}: {e}"))?;
        if axes.insert(name.to_string(), values).is_some() {
            return Err(format!("grid axis `{name}` given twice"));
        }
    }
    let mut take = |name: &str| axes.remove(name).ok_or_else(|| format!("grid needs a `{name}` axis"));
    Ok(RegionGrid {
        kappa: take("kappa")?,
        u: take("u")?,
    })
}

/// A `--tol name=value` override.
#[derive(Debug, Clone, PartialEq)]
pub struct ToleranceOverride {
    pub name: String,
    pub value: f64,
}

const TOLERANCE_NAMES: [&str; 6] = [
    "exact_spectrum",
    "orthonormality",
    "ev_odd_relative",
    "growth_band",
    "overlap_floor",
    "finite_oracle",
];

pub fn tolerance_override(text: &str) -> Result<ToleranceOverride, String> {
    let (name, value) = text.split_once('=').ok_or_else(|| format!("`{text}` is not of the form name=value"))?;
    let name = name.trim();
    if !TOLERANCE_NAMES.contains(&name) {
        return Err(format!("unknown tolerance `{name}` (expected one of {})", TOLERANCE_NAMES.join(", ")));
    }
    let value: f64 = value.trim().parse().map_err(|_| format!("{name}: `{value}` is not a number"))?;
    if !(value.is_finite() && value >= 0.0) {
        return Err(format!("{name}: tolerance must be finite and non-negative"));
    }
    Ok(ToleranceOverride {
        name: name.to_string(),
        value,
    })
}

/// Applies overrides in order; later ones win.
pub fn apply_overrides(mut t: Tolerances, overrides: &[ToleranceOverride]) -> Tolerances {
    for o in overrides {
        let slot = match o.name.as_str() {
            "exact_spectrum" => &mut t.exact_spectrum,
            "orthonormality" => &mut t.orthonormality,
            "ev_odd_relative" => &mut t.ev_odd_relative,
            "growth_band" => &mut t.growth_band,
            "overlap_floor" => &mut t.overlap_floor,
            "finite_oracle" => &mut t.finite_oracle,
            _ => unreachable!("validated by the parser"),
        };
        *slot = o.value;
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use wittenlab::numerics::rational::rat;

    #[test]
    fn basis_size_has_a_floor() {
        assert_eq!(basis_size("60"), Ok(60));
        assert!(basis_size("7").unwrap_err().contains("at least 8"));
        assert!(basis_size("x").is_err());
    }

    #[test]
    fn scale_grids_are_positive_and_ascending() {
        assert_eq!(scale_grid("1,10,100").unwrap().0, vec![1.0, 10.0, 100.0]);
        assert!(scale_grid("1,0.5").unwrap_err().contains("ascending"));
        assert!(scale_grid("0,1").unwrap_err().contains("positive"));
        assert!(scale_grid("1,,2").is_err());
    }

    #[test]
    fn region_grids_are_rational() {
        let g = region_grid("kappa=-1:1:1/2,u=1/10:3/10:1/10").unwrap();
        assert_eq!(g.kappa, vec![rat(-1, 1), rat(-1, 2), rat(0, 1), rat(1, 2), rat(1, 1)]);
        assert_eq!(g.u, vec![rat(1, 10), rat(1, 5), rat(3, 10)]);
        assert!(region_grid("kappa=0:1:0.1,u=0:1:1").unwrap_err().starts_with("kappa"));
        assert!(region_grid("kappa=0:1:1").unwrap_err().contains("`u`"));
        assert!(region_grid("kappa=0:1:1,u=0:1:1,mu=0:1:1").is_err());
    }

    #[test]
    fn tolerance_overrides_apply_by_name() {
        let o = tolerance_override("growth_band=0.2").unwrap();
        let t = apply_overrides(Tolerances::default(), &[o]);
        assert_eq!(t.growth_band, 0.2);
        assert_eq!(t.exact_spectrum, Tolerances::default().exact_spectrum);
        assert!(tolerance_override("band=1").is_err());
    }
}
