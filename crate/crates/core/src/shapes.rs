//! Partitions, skew diagrams, and translation-invariant shape identity.
//!
//! A [`SkewShape`] is a validated pair of partitions (outer, inner). Its
//! identity is the normalized [`CellSet`]: two shapes are equal exactly when
//! their box arrays coincide after translating the minimum occupied row and
//! column to 1. This is what makes `4,4,4,4/2,2,1` equal to any padded
//! representative of the same rotated diagram.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::Error;

/// A partition: a weakly decreasing sequence of positive integers.
///
/// The empty partition is valid and denotes the empty diagram.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that `parts` is weakly decreasing with every part positive.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 || (i > 0 && parts[i - 1] < p) {
                return Err(Error::NotWeaklyDecreasing { index: i });
            }
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of boxes, |λ|.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The part at 0-based index `i`, or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True if the diagram of `other` fits inside the diagram of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// The conjugate partition: part `i` counts the parts of `self` that are ≥ i+1.
    ///
    /// Conjugation transposes the diagram, so it is an involution.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let mut conj = Vec::with_capacity(self.parts[0]);
        for i in 1..=self.parts[0] {
            conj.push(self.parts.iter().take_while(|&&p| p >= i).count());
        }
        Partition { parts: conj }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        Ok(())
    }
}

fn parse_parts(text: &str) -> Result<Partition, Error> {
    let mut parts = Vec::new();
    for (i, token) in text.split(',').enumerate() {
        let value: usize = token
            .trim()
            .parse()
            .map_err(|_| Error::InvalidInteger { index: i })?;
        if value == 0 {
            return Err(Error::NotWeaklyDecreasing { index: i });
        }
        parts.push(value);
    }
    Partition::new(parts)
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma-separated text form, e.g. `4,3,2,2`.
    fn from_str(s: &str) -> Result<Self, Error> {
        parse_parts(s)
    }
}

/// Whether a shape was recognized as a straight diagram or a rotated one.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Orientation {
    Straight,
    Rotated,
}

/// A normalized set of box coordinates: (row, column), 1-based, translated so
/// the minimum occupied row and minimum occupied column are both 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellSet {
    boxes: BTreeSet<(usize, usize)>,
}

impl CellSet {
    /// Builds a normalized cell set. Panics if `cells` is empty.
    pub fn new(cells: impl IntoIterator<Item = (usize, usize)>) -> CellSet {
        let raw: BTreeSet<(usize, usize)> = cells.into_iter().collect();
        assert!(!raw.is_empty(), "a cell set must contain at least one box");
        let min_row = raw.iter().map(|&(r, _)| r).min().unwrap();
        let min_col = raw.iter().map(|&(_, c)| c).min().unwrap();
        let boxes = raw
            .into_iter()
            .map(|(r, c)| (r - min_row + 1, c - min_col + 1))
            .collect();
        CellSet { boxes }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.boxes.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, cell: (usize, usize)) -> bool {
        self.boxes.contains(&cell)
    }

    pub fn max_row(&self) -> usize {
        self.boxes.iter().map(|&(r, _)| r).max().unwrap()
    }

    pub fn max_col(&self) -> usize {
        self.boxes.iter().map(|&(_, c)| c).max().unwrap()
    }

    /// The cell set rotated by 180 degrees, renormalized.
    pub fn rotate180(&self) -> CellSet {
        let (rows, cols) = (self.max_row(), self.max_col());
        CellSet::new(self.iter().map(|(r, c)| (rows + 1 - r, cols + 1 - c)))
    }

    /// Per-row extents: row → (first column, last column, box count).
    pub(crate) fn row_spans(&self) -> BTreeMap<usize, (usize, usize, usize)> {
        let mut spans: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
        for (r, c) in self.iter() {
            let entry = spans.entry(r).or_insert((c, c, 0));
            entry.0 = entry.0.min(c);
            entry.1 = entry.1.max(c);
            entry.2 += 1;
        }
        spans
    }

    /// If the cells form a left-justified diagram of a partition ν, returns ν.
    pub fn as_straight_partition(&self) -> Option<Partition> {
        let spans = self.row_spans();
        let mut lengths = Vec::with_capacity(spans.len());
        for row in 1..=self.max_row() {
            let &(start, end, count) = spans.get(&row)?;
            if start != 1 || count != end - start + 1 {
                return None;
            }
            lengths.push(end);
        }
        Partition::new(lengths).ok()
    }
}

/// A skew diagram λ/μ: the boxes of the outer partition not in the inner one.
#[derive(Clone, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    /// Validates containment of `inner` in `outer` and that at least one box remains.
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, Error> {
        if inner.len() > outer.len() {
            return Err(Error::ContainmentViolation {
                row: outer.len() + 1,
            });
        }
        for i in 0..inner.len() {
            if inner.part(i) > outer.part(i) {
                return Err(Error::ContainmentViolation { row: i + 1 });
            }
        }
        if outer.size() == inner.size() {
            return Err(Error::EmptyShape);
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape of a nonempty partition (inner = ∅).
    pub fn straight(outer: Partition) -> Result<Self, Error> {
        SkewShape::new(outer, Partition::empty())
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes, |λ| − |μ|.
    pub fn boxes(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// The normalized cell set: box (i,j) present iff μ_i < j ≤ λ_i.
    pub fn cells(&self) -> CellSet {
        let mut cells = Vec::with_capacity(self.boxes());
        for i in 0..self.outer.len() {
            for j in self.inner.part(i) + 1..=self.outer.part(i) {
                cells.push((i + 1, j));
            }
        }
        CellSet::new(cells)
    }

    /// Reconstructs the canonical (outer, inner) pair realizing a cell set.
    pub fn from_cells(cells: &CellSet) -> Result<Self, Error> {
        let spans = cells.row_spans();
        for &(start, end, count) in spans.values() {
            if count != end - start + 1 {
                return Err(Error::NotSkew); // row has a hole
            }
        }
        let max_row = cells.max_row();
        let mut outer = vec![0usize; max_row];
        let mut inner = vec![0usize; max_row];
        // Walk bottom-up so empty rows can borrow the extent of the occupied
        // row below them.
        let mut below: Option<(usize, usize)> = None;
        for row in (1..=max_row).rev() {
            match spans.get(&row) {
                Some(&(start, end, _)) => {
                    if let Some((s_below, e_below)) = below {
                        if e_below > end || s_below > start {
                            return Err(Error::NotSkew);
                        }
                        // A gap row in between needs the lower block strictly left.
                        if !spans.contains_key(&(row + 1)) && e_below > start - 1 {
                            return Err(Error::NotSkew);
                        }
                    }
                    outer[row - 1] = end;
                    inner[row - 1] = start - 1;
                    below = Some((start, end));
                }
                None => {
                    let (_, e_below) = below.ok_or(Error::NotSkew)?;
                    outer[row - 1] = e_below;
                    inner[row - 1] = e_below;
                }
            }
        }
        while inner.last() == Some(&0) {
            inner.pop();
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        debug_assert_eq!(&shape.cells(), cells);
        Ok(shape)
    }

    /// The shape rotated by 180 degrees.
    pub fn rotate180(&self) -> SkewShape {
        SkewShape::from_cells(&self.cells().rotate180())
            .expect("the rotation of a skew diagram is a skew diagram")
    }

    /// True iff every pair of adjacent occupied rows shares at least one column.
    pub fn is_connected(&self) -> bool {
        let cells = self.cells();
        let spans = cells.row_spans();
        let rows: Vec<_> = spans.iter().collect();
        rows.windows(2).all(|pair| {
            let (_, &(s_up, e_up, _)) = pair[0];
            let (_, &(s_dn, e_dn, _)) = pair[1];
            s_up.max(s_dn) <= e_up.min(e_dn)
        })
    }

    /// Box counts of the occupied columns, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        let mut columns: BTreeMap<usize, usize> = BTreeMap::new();
        for (_, c) in self.cells().iter() {
            *columns.entry(c).or_insert(0) += 1;
        }
        columns.into_values().collect()
    }

    /// Length of the longest column.
    pub fn max_column_length(&self) -> usize {
        self.column_lengths().into_iter().max().unwrap_or(0)
    }

    /// Recognizes the shape as a straight diagram ν or a rotated diagram ν°.
    ///
    /// Shapes that are both (rectangles) report `Straight`.
    pub fn as_straight_or_rotated(&self) -> Option<(Partition, Orientation)> {
        let cells = self.cells();
        if let Some(nu) = cells.as_straight_partition() {
            return Some((nu, Orientation::Straight));
        }
        if let Some(nu) = cells.rotate180().as_straight_partition() {
            return Some((nu, Orientation::Rotated));
        }
        None
    }
}

impl PartialEq for SkewShape {
    fn eq(&self, other: &Self) -> bool {
        self.cells() == other.cells()
    }
}

impl Eq for SkewShape {}

impl Hash for SkewShape {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.cells().hash(state);
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.outer)?;
        if !self.inner.is_empty() {
            write!(f, "/{}", self.inner)?;
        }
        Ok(())
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// Parses `PARTS` or `PARTS/PARTS`, e.g. `4,3,2,2/2,1`.
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.split_once('/') {
            None => SkewShape::straight(s.parse()?),
            Some((outer, inner)) => {
                if inner.contains('/') {
                    return Err(Error::InvalidInteger { index: 0 });
                }
                SkewShape::new(outer.parse()?, inner.parse()?)
            }
        }
    }
}

/// All nonempty partitions with at most `max_sum` boxes.
pub fn partitions_up_to(max_sum: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(current: &mut Vec<usize>, remaining: usize, max_part: usize, out: &mut Vec<Partition>) {
        if !current.is_empty() {
            out.push(Partition {
                parts: current.clone(),
            });
        }
        for part in (1..=max_part.min(remaining)).rev() {
            current.push(part);
            rec(current, remaining - part, part, out);
            current.pop();
        }
    }
    rec(&mut current, max_sum, max_sum, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Partitions with exactly `parts` parts, each at most `max_part`, summing to
/// at most `max_sum`. With `parts = 0` this is just the empty partition.
pub fn partitions_exact_parts(parts: usize, max_part: usize, max_sum: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        current: &mut Vec<usize>,
        parts_left: usize,
        budget: usize,
        max_part: usize,
        out: &mut Vec<Partition>,
    ) {
        if parts_left == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        // every remaining part needs at least one box
        if budget < parts_left {
            return;
        }
        for part in 1..=max_part.min(budget - (parts_left - 1)) {
            current.push(part);
            rec(current, parts_left - 1, budget - part, part, out);
            current.pop();
        }
    }
    rec(&mut current, parts, max_sum, max_part, &mut out);
    out
}

/// All connected skew shapes with at most `max_boxes` boxes, one canonical
/// representative per translation class, ordered by box count, then outer
/// partition in descending lexicographic order, then inner likewise.
pub fn connected_skew_shapes(max_boxes: usize) -> Vec<SkewShape> {
    fn rec(
        rows: &mut Vec<(usize, usize)>,
        used: usize,
        max_boxes: usize,
        out: &mut Vec<SkewShape>,
    ) {
        let (prev_start, prev_end) = *rows.last().unwrap();
        if prev_start == 1 {
            out.push(shape_from_rows(rows));
        }
        for start in 1..=prev_start {
            for end in start..=prev_end {
                // the new row must share a column with the one above
                if prev_start > end {
                    continue;
                }
                let width = end - start + 1;
                if used + width > max_boxes {
                    continue;
                }
                rows.push((start, end));
                rec(rows, used + width, max_boxes, out);
                rows.pop();
            }
        }
    }

    fn shape_from_rows(rows: &[(usize, usize)]) -> SkewShape {
        let outer: Vec<usize> = rows.iter().map(|&(_, e)| e).collect();
        let mut inner: Vec<usize> = rows.iter().map(|&(s, _)| s - 1).collect();
        while inner.last() == Some(&0) {
            inner.pop();
        }
        SkewShape::new(Partition { parts: outer }, Partition { parts: inner })
            .expect("interval stacks are valid skew shapes")
    }

    let mut out = Vec::new();
    for start in 1..=max_boxes {
        for end in start..=max_boxes {
            if end - start + 1 > max_boxes {
                continue;
            }
            let mut rows = vec![(start, end)];
            rec(&mut rows, end - start + 1, max_boxes, &mut out);
        }
    }
    out.sort_by(|a, b| {
        a.boxes()
            .cmp(&b.boxes())
            .then_with(|| b.outer.cmp(&a.outer))
            .then_with(|| b.inner.cmp(&a.inner))
    });
    out
}
