use std::fs;
use std::io::Read;
use std::path::Path;

use rand::Rng;
use reeskit_core::diagram::rees_package_diagrams;
use reeskit_core::random::{random_diagram_ideal, random_monomial_ideal};
use reeskit_core::semigroup::rees_package_monomial;
use reeskit_core::{AffineSemigroup, DiagramIdeal, Error, Hyperplane, MonomialIdeal, ReesPackage};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;

use crate::Failure;

/// An ideal as read from input: monomial in a semigroup ring, or generated by
/// shapes of a matrix family.
#[derive(Clone, Debug)]
pub enum Ideal {
    Monomial(MonomialIdeal),
    Diagram(DiagramIdeal),
}

impl Ideal {
    pub fn package(&self) -> Result<ReesPackage, Error> {
        match self {
            Ideal::Monomial(i) => rees_package_monomial(i),
            Ideal::Diagram(d) => rees_package_diagrams(d),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SemigroupInput {
    Named(String),
    Generators(Vec<Vec<i64>>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MonomialInput {
    #[serde(default)]
    semigroup: Option<SemigroupInput>,
    #[serde(default)]
    rank: Option<usize>,
    ideal: Vec<Vec<i64>>,
}

impl MonomialInput {
    fn build(self) -> Result<MonomialIdeal, Error> {
        let width = self.ideal.first().map(Vec::len);
        let semigroup = match self.semigroup {
            None => orthant(self.rank.or(width))?,
            Some(SemigroupInput::Named(name)) if name == "orthant" => orthant(self.rank.or(width))?,
            Some(SemigroupInput::Named(name)) => return Err(Error::InvalidInput(format!("unknown semigroup {name:?}"))),
            Some(SemigroupInput::Generators(g)) => {
                let rank = self.rank.or(g.first().map(Vec::len)).ok_or_else(|| invalid("empty semigroup"))?;
                AffineSemigroup::new(rank, g)?
            }
        };
        MonomialIdeal::new(semigroup, self.ideal)
    }
}

fn orthant(rank: Option<usize>) -> Result<AffineSemigroup, Error> {
    rank.map(AffineSemigroup::orthant).ok_or_else(|| invalid("cannot infer the rank of an empty ideal"))
}

fn invalid(msg: &str) -> Error {
    Error::InvalidInput(msg.into())
}

#[derive(Deserialize)]
#[serde(untagged)]
pub enum OneOrMany<T> {
    One(T),
    Many(Vec<T>),
}

impl<T> OneOrMany<T> {
    pub fn into_vec(self) -> Vec<T> {
        match self {
            OneOrMany::One(x) => vec![x],
            OneOrMany::Many(v) => v,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperplanePair {
    pub left: OneOrMany<Hyperplane>,
    pub right: OneOrMany<Hyperplane>,
}

/// Reads `path` (`-` for stdin) as JSON, reporting syntax errors with their
/// position.
pub fn read_json(path: &Path) -> Result<Value, Failure> {
    let name = path.display().to_string();
    let text = if name == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{name}: {e}")))?
    };
    serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{name}:{}:{}: {}", e.line(), e.column(), strip_position(&e))))
}

fn strip_position(e: &serde_json::Error) -> String {
    let msg = e.to_string();
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg,
    }
}

fn decode<T: DeserializeOwned>(value: Value, what: &str) -> Result<T, Failure> {
    serde_json::from_value(value).map_err(|e| Failure::Input(format!("{what}: {e}")))
}

pub fn parse_ideal(value: Value) -> Result<Ideal, Failure> {
    let Value::Object(map) = &value else {
        return Err(Failure::Input("expected a JSON object describing an ideal".into()));
    };
    if map.contains_key("family") {
        Ok(Ideal::Diagram(decode(value, "diagram ideal")?))
    } else if map.contains_key("ideal") {
        let raw: MonomialInput = decode(value, "monomial ideal")?;
        Ok(Ideal::Monomial(raw.build()?))
    } else {
        Err(Failure::Input("an ideal needs either \"ideal\" (monomial) or \"family\" (diagram)".into()))
    }
}

pub fn parse_pair(value: Value) -> Result<(Ideal, Ideal), Failure> {
    let Value::Object(mut map) = value else {
        return Err(Failure::Input("expected a JSON object with \"left\" and \"right\"".into()));
    };
    let mut side = |key: &str| {
        map.remove(key).ok_or_else(|| Failure::Input(format!("missing \"{key}\""))).and_then(parse_ideal)
    };
    let left = side("left")?;
    let right = side("right")?;
    if let Some(key) = map.keys().next() {
        return Err(Failure::Input(format!("unknown field \"{key}\"")));
    }
    Ok((left, right))
}

pub fn parse_hyperplanes(value: Value) -> Result<(Vec<Hyperplane>, Vec<Hyperplane>), Failure> {
    let pair: HyperplanePair = decode(value, "hyperplanes")?;
    Ok((pair.left.into_vec(), pair.right.into_vec()))
}

/// A seeded random ideal: monomial most of the time, diagram otherwise.
pub fn random_ideal(r: &mut impl Rng) -> Ideal {
    if r.gen_bool(0.75) {
        Ideal::Monomial(random_monomial_ideal(r, 3, 4, 6))
    } else {
        Ideal::Diagram(random_diagram_ideal(r))
    }
}
