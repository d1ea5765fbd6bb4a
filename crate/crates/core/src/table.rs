//! The printed results table for simply-connected centres, kept as a test
//! fixture. Values of q on the named centre generators are always computed
//! from the norm formula; this table records what the printed rows state so
//! the two can be compared. Rows that disagree with the formula (the C
//! series and E7) get FLAG entries in reports rather than silent fixes.

use crate::qz::QZElem;
use crate::root_data::{Series, SimpleType};

/// One printed entry: a generator label and the stated q value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedEntry {
    pub label: String,
    pub value: QZElem,
}

/// The printed row for a type at level k, or None for the centreless types.
pub fn printed_row(t: SimpleType, k: i64) -> Option<Vec<PrintedEntry>> {
    let e = |label: String, num: i64, den: i64| PrintedEntry {
        label,
        value: QZElem::new(num, den).expect("fixture denominators nonzero"),
    };
    match t.series {
        Series::A => {
            // q(omega_1) = k(n-1)/(2n) for SU(n), n = rank + 1
            let n = t.rank as i64 + 1;
            Some(vec![e("q(w1)".into(), k * (n - 1), 2 * n)])
        }
        Series::B => Some(vec![e("q(w1)".into(), k, 2)]),
        Series::C => {
            // printed: exp(k n / 2); the formula with the computed coweight
            // norm gives exp(k n / 4), so this row carries flags
            let n = t.rank as i64;
            Some(vec![e(format!("q(w{n})"), k * n, 2)])
        }
        Series::D => {
            let r = t.rank as i64;
            if t.rank % 2 == 1 {
                Some(vec![e(format!("q(w{r})"), k * r, 8)])
            } else {
                Some(vec![
                    e(format!("q(w{})", r - 1), k * r, 8),
                    e(format!("q(w{r})"), k * r, 8),
                    e(format!("q(w{}+w{r})", r - 1), k, 2),
                ])
            }
        }
        Series::E if t.rank == 6 => Some(vec![e("q(w1)".into(), 2 * k, 3)]),
        // printed: exp(k/4); the formula gives exp(3k/4)
        Series::E if t.rank == 7 => Some(vec![e("q(w7)".into(), k, 4)]),
        _ => None,
    }
}

/// Generator labels matching `printed_row`, for report columns.
pub fn generator_labels(t: SimpleType) -> Vec<String> {
    match printed_row(t, 1) {
        Some(entries) => entries.into_iter().map(|x| x.label).collect(),
        None => vec![],
    }
}
