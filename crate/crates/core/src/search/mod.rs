//! Orchestration: the small growth search with resumable persistence,
//! the supersporadic sweeps over the large sporadics, exhaustive bound
//! verification for the reduction propositions, and certificate assembly.

mod bounds;
mod certificate;
mod small;
mod supersporadic;

pub use bounds::{type_one_minima, verify_bounds, BoundsReport, PropMin, TypeOneReport};
pub use certificate::{
    emit_certificate, gather_inputs, CertCase, Certificate, CertificateInputs, Provenance,
    Verdict,
};
pub use small::{load_summary, run_small_search, seeds, RoundStats, SearchMode, SearchOptions, SearchRound, SearchSummary};
pub use supersporadic::{load_supersporadic, run_supersporadic, KReport, SupersporadicOptions, SupersporadicReport};

use crate::lmatrix::{read_graph_str, write_graph_string, CanonKey, GraphError, LGraph};
use crate::polynomial::IntPoly;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Errors from search orchestration.
#[derive(Debug)]
pub enum SearchError {
    BadOptions(String),
    Io(std::io::Error),
    Corrupt(String),
    Graph(GraphError),
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::BadOptions(m) => write!(f, "invalid options: {m}"),
            SearchError::Io(e) => write!(f, "io error: {e}"),
            SearchError::Corrupt(m) => write!(f, "corrupt persisted state: {m}"),
            SearchError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SearchError {}

impl From<std::io::Error> for SearchError {
    fn from(e: std::io::Error) -> SearchError {
        SearchError::Io(e)
    }
}

impl From<GraphError> for SearchError {
    fn from(e: GraphError) -> SearchError {
        SearchError::Graph(e)
    }
}

/// An exact rational enclosure, serialized as `num/den` strings.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Enclosure {
    pub lower: String,
    pub upper: String,
    pub decimal: String,
}

impl Enclosure {
    pub fn from_bounds(lo: &BigRational, hi: &BigRational) -> Enclosure {
        let mid = (lo + hi) / BigRational::from_integer(BigInt::from(2));
        Enclosure {
            lower: ratio_string(lo),
            upper: ratio_string(hi),
            decimal: crate::polynomial::decimal_string(&mid, 12),
        }
    }

    pub fn lower_rational(&self) -> Result<BigRational, SearchError> {
        parse_ratio(&self.lower)
    }

    pub fn upper_rational(&self) -> Result<BigRational, SearchError> {
        parse_ratio(&self.upper)
    }
}

pub(crate) fn ratio_string(v: &BigRational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

pub(crate) fn parse_ratio(s: &str) -> Result<BigRational, SearchError> {
    let (n, d) = s
        .split_once('/')
        .ok_or_else(|| SearchError::Corrupt(format!("bad rational {s:?}")))?;
    let n: BigInt = n.parse().map_err(|_| SearchError::Corrupt(format!("bad rational {s:?}")))?;
    let d: BigInt = d.parse().map_err(|_| SearchError::Corrupt(format!("bad rational {s:?}")))?;
    if d.is_negative() || d == BigInt::from(0) {
        return Err(SearchError::Corrupt(format!("bad rational {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// One deduplicated equivalence class kept by a search round.
#[derive(Clone, Debug)]
pub struct ClassRec {
    pub key: CanonKey,
    pub graph: LGraph,
    pub chi: IntPoly,
    pub mahler: Option<(BigRational, BigRational)>,
}

/// Serialized form of a [`ClassRec`] (keys in hex, exact text bodies).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassRecFile {
    pub key: String,
    pub graph: String,
    pub chi: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mahler: Option<Enclosure>,
}

impl ClassRec {
    pub(crate) fn to_file(&self) -> ClassRecFile {
        ClassRecFile {
            key: self.key.hex(),
            graph: write_graph_string(&self.graph),
            chi: self.chi.coeffs().iter().map(|c| c.to_string()).collect(),
            mahler: self.mahler.as_ref().map(|(lo, hi)| Enclosure::from_bounds(lo, hi)),
        }
    }

    pub(crate) fn from_file(f: &ClassRecFile) -> Result<ClassRec, SearchError> {
        let graph = read_graph_str(&f.graph)?;
        let (computed, key) = graph.canonical_form();
        let _ = computed;
        if key.hex() != f.key {
            return Err(SearchError::Corrupt("stored key does not match graph".into()));
        }
        let chi = IntPoly::from_coeffs(
            f.chi
                .iter()
                .map(|s| s.parse::<BigInt>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| SearchError::Corrupt("bad chi coefficient".into()))?,
        );
        let mahler = match &f.mahler {
            None => None,
            Some(e) => Some((e.lower_rational()?, e.upper_rational()?)),
        };
        Ok(ClassRec { key, graph, chi, mahler })
    }
}

/// Certified Mahler enclosure at the standard tolerance (1e-9).
pub(crate) fn mahler_of_chi(chi: &IntPoly) -> (BigRational, BigRational) {
    let tol = BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000u64));
    let m = crate::polynomial::mahler_real_rooted(chi, &tol).expect("real-rooted char poly");
    (m.lower, m.upper)
}
