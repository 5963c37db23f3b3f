//! Built-in worked examples with their committed reports.

pub struct CorpusEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub config: &'static str,
    pub expected: &'static str,
}

macro_rules! entry {
    ($name:literal, $summary:literal) => {
        CorpusEntry {
            name: $name,
            summary: $summary,
            config: include_str!(concat!("../../corpus/", $name, ".json")),
            expected: include_str!(concat!("../../corpus/", $name, ".report.json")),
        }
    };
}

pub const ENTRIES: &[CorpusEntry] = &[
    entry!(
        "pinched-line",
        "projective line over Q_3 pinched at two points; Br1 splits"
    ),
    entry!(
        "pinched-conic",
        "Severi-Brauer conic over Q_5 pinched at a rational point"
    ),
    entry!(
        "wound-group",
        "regular curve over an imperfect field pinched along a purely inseparable quadratic fiber"
    ),
    entry!(
        "inseparable-point-d1",
        "line over F_2((t)) with one purely inseparable fiber of degree 2"
    ),
    entry!(
        "inseparable-point-d2",
        "line over F_2((t)) with one purely inseparable fiber of degree 4"
    ),
    entry!(
        "inseparable-point-d3",
        "line over F_2((t)) with one purely inseparable fiber of degree 8"
    ),
    entry!(
        "index-order",
        "curve of index 4 over Q_5 pinched at a point of degree 6"
    ),
    entry!(
        "seminormalization-chain",
        "three residue-isomorphism steps over an abstract field"
    ),
    entry!("empty-locus", "smooth curve of index 3 over Q_7, nothing pinched"),
];

pub fn find(name: &str) -> Option<&'static CorpusEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// 1-based line number of the first difference, if any.
pub fn first_difference(expected: &str, got: &str) -> Option<usize> {
    let mut a = expected.lines();
    let mut b = got.lines();
    let mut n = 1;
    loop {
        match (a.next(), b.next()) {
            (None, None) => {
                return (expected.len() != got.len()).then_some(n);
            }
            (x, y) if x != y => return Some(n),
            _ => n += 1,
        }
    }
}
