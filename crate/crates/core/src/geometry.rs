//! Exact rational plane geometry: points, configurations, convex hulls and the
//! hull-disjointness predicate that defines when a partition is noncrossing.
//!
//! Two independent routes decide disjointness:
//!
//! * [`convex_hull`] + [`hulls_disjoint`] work directly on rational coordinates
//!   with a separating-axis test. This is the reference route.
//! * [`Predicates`] tabulates the orientation of every point triple once and
//!   answers hull and disjointness queries on index sets by table lookup. The
//!   enumerator and the lattice join use this route.
//!
//! No floating-point value is used by any predicate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest configuration the bitmask machinery supports.
pub const MAX_MASK_POINTS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    /// Builds a point from `(num/den, num/den)` pairs.
    pub fn from_ratios(x: (i64, i64), y: (i64, i64)) -> Self {
        Point::new(ratio(x.0, x.1), ratio(y.0, y.1))
    }

    fn sub(&self, other: &Point) -> (BigRational, BigRational) {
        (&self.x - &other.x, &self.y - &other.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn cross(a: &(BigRational, BigRational), b: &(BigRational, BigRational)) -> BigRational {
    &a.0 * &b.1 - &a.1 * &b.0
}

/// Sign of the turn `a -> b -> c`: positive for counterclockwise.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> Ordering {
    cross(&b.sub(a), &c.sub(a)).cmp(&BigRational::zero())
}

/// Parses an exact rational from `"p/q"`, an integer, or a finite decimal such as `"1.4"`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if s.contains('/') {
            return Err(Error::Parse(format!("malformed rational `{s}`")));
        }
        let negative = whole.starts_with('-');
        let digits = format!("{}{}", whole.trim_start_matches(['-', '+']), frac);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("malformed decimal `{s}`")));
        }
        let mut num: BigInt = digits
            .parse()
            .map_err(|_| Error::Parse(format!("malformed decimal `{s}`")))?;
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(num, den));
    }
    if let Some((_, den)) = s.split_once('/') {
        if den.trim().parse::<BigInt>().map(|d| d.is_zero()).unwrap_or(false) {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
    }
    BigRational::from_str(s).map_err(|_| Error::Parse(format!("malformed rational `{s}`")))
}

/// Formats a rational the way configuration files store it: `"p/q"`, or `"p"` for integers.
pub fn format_rational(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// The configuration families with a built-in rational realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Anything read from a file or assembled by hand.
    Generic,
    /// `P_n`: `n` collinear points.
    Collinear,
    /// `Q_n`: vertices of a convex `n`-gon.
    Polygon,
    /// `T_n`: `n` collinear points plus one point off the line.
    T,
    /// `U_{m,n}`: points on the two rays of a cone, apex excluded.
    U,
    /// `V_{m,n}`: `U_{m,n}` plus the apex.
    V,
    /// `S_{m,n}`: `m+2` points on a diameter, `n` on the open half circle.
    S,
}

impl Family {
    /// Families taking a single size parameter (`P`, `Q`, `T`).
    pub fn is_single_parameter(self) -> bool {
        matches!(self, Family::Collinear | Family::Polygon | Family::T)
    }

    pub fn letter(self) -> &'static str {
        match self {
            Family::Generic => "generic",
            Family::Collinear => "P",
            Family::Polygon => "Q",
            Family::T => "T",
            Family::U => "U",
            Family::V => "V",
            Family::S => "S",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "P" | "p" => Ok(Family::Collinear),
            "Q" | "q" => Ok(Family::Polygon),
            "T" | "t" => Ok(Family::T),
            "U" | "u" => Ok(Family::U),
            "V" | "v" => Ok(Family::V),
            "S" | "s" => Ok(Family::S),
            "generic" => Ok(Family::Generic),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

/// Family plus its parameters. Single-parameter families keep their size in `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyTag {
    pub family: Family,
    pub m: usize,
    pub n: usize,
}

impl FamilyTag {
    pub fn generic() -> Self {
        FamilyTag {
            family: Family::Generic,
            m: 0,
            n: 0,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Generic => f.write_str("generic"),
            fam if fam.is_single_parameter() => write!(f, "{}_{}", fam, self.m),
            fam => write!(f, "{}_{{{},{}}}", fam, self.m, self.n),
        }
    }
}

/// An ordered list of distinct points with display labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    points: Vec<Point>,
    labels: Vec<String>,
    tag: FamilyTag,
}

impl Configuration {
    /// Validates and builds a generic configuration. Labels default to `p0, p1, ...`.
    pub fn new(points: Vec<Point>, labels: Option<Vec<String>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyConfiguration);
        }
        Self::build(points, labels, FamilyTag::generic())
    }

    fn build(points: Vec<Point>, labels: Option<Vec<String>>, tag: FamilyTag) -> Result<Self> {
        let labels = match labels {
            Some(labels) if labels.len() != points.len() => {
                return Err(Error::LabelMismatch {
                    points: points.len(),
                    labels: labels.len(),
                })
            }
            Some(labels) => labels,
            None => (0..points.len()).map(|i| format!("p{i}")).collect(),
        };
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| points[a].cmp(&points[b]).then(a.cmp(&b)));
        for w in order.windows(2) {
            if points[w[0]] == points[w[1]] {
                return Err(Error::DuplicatePoint {
                    first: w[0].min(w[1]),
                    second: w[0].max(w[1]),
                });
            }
        }
        Ok(Configuration {
            points,
            labels,
            tag,
        })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn tag(&self) -> FamilyTag {
        self.tag
    }

    pub fn family(&self) -> Family {
        self.tag.family
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The sub-configuration on `indices`, in that order; the result is generic.
    pub fn subset(&self, indices: &[usize]) -> Result<Configuration> {
        for &i in indices {
            if i >= self.len() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    len: self.len(),
                });
            }
        }
        Self::build(
            indices.iter().map(|&i| self.points[i].clone()).collect(),
            Some(indices.iter().map(|&i| self.labels[i].clone()).collect()),
            FamilyTag::generic(),
        )
    }

    /// Applies `f` to every point, keeping labels and family.
    pub fn map_points(&self, f: impl Fn(&Point) -> Point) -> Result<Configuration> {
        Self::build(
            self.points.iter().map(f).collect(),
            Some(self.labels.clone()),
            self.tag,
        )
    }

    /// Parses the JSON configuration format
    /// `{"points": [["p/q", "r/s"], ...], "labels": [...]}`.
    pub fn from_json(text: &str) -> Result<Configuration> {
        let file: ConfigurationFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let points = file
            .points
            .iter()
            .map(|[x, y]| Ok(Point::new(x.to_rational()?, y.to_rational()?)))
            .collect::<Result<Vec<_>>>()?;
        Configuration::new(points, file.labels)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let file = ConfigurationFile {
            points: self
                .points
                .iter()
                .map(|p| {
                    [
                        RationalText::Text(format_rational(&p.x)),
                        RationalText::Text(format_rational(&p.y)),
                    ]
                })
                .collect(),
            labels: Some(self.labels.clone()),
        };
        serde_json::to_value(file).expect("configuration serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("configuration serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct ConfigurationFile {
    points: Vec<[RationalText; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RationalText {
    Int(i64),
    Text(String),
}

impl RationalText {
    fn to_rational(&self) -> Result<BigRational> {
        match self {
            RationalText::Int(v) => Ok(int(*v)),
            RationalText::Text(s) => parse_rational(s),
        }
    }
}

/// A point on the unit circle from the rational parametrization `t ↦ ((1−t²)/(1+t²), 2t/(1+t²))`.
pub fn circle_point(t: &BigRational) -> Point {
    let one = BigRational::one();
    let t2 = t * t;
    let den = &one + &t2;
    Point::new((&one - &t2) / &den, (t * BigRational::from_integer(2.into())) / den)
}

/// A concrete rational realization of one of the standard families.
///
/// Points are stored in counterclockwise order around the hull, rotated so the
/// point removed by the recursive decompositions comes last:
///
/// * `P_m`: `(i, 0)` for `i = 0..m`.
/// * `Q_m`: unit-circle points with `t = k/(m+1−k)`, `k = 1..m`.
/// * `T_m`: `y = (0, 1)`, then `x_i = (i, 0)` for `i = 1..m`.
/// * `U_{m,n}`: `y_n, ..., y_1` with `y_j = (0, j)`, then `x_1, ..., x_m` with `x_i = (i, 0)`.
/// * `V_{m,n}`: as `U_{m,n}` with the apex `z = (0, 0)` between `y_1` and `x_1`.
/// * `S_{m,n}`: `y_n, ..., y_1` on the unit circle with `t = (n+1−j)/j`, then
///   `x_0, ..., x_{m+1}` evenly spaced on `[−1, 1] × {0}`.
///
/// For `P`, `Q` and `T` the size is `m` and `n` is ignored.
pub fn standard_config(family: Family, m: usize, n: usize) -> Result<Configuration> {
    let mut points = Vec::new();
    let mut labels = Vec::new();
    let mut push = |p: Point, label: String| {
        points.push(p);
        labels.push(label);
    };
    let y_axis = |push: &mut dyn FnMut(Point, String)| {
        for j in (1..=n).rev() {
            push(Point::from_ints(0, j as i64), format!("y{j}"));
        }
    };
    match family {
        Family::Generic => return Err(Error::UnknownFamily("generic".into())),
        Family::Collinear => {
            for i in 0..m {
                push(Point::from_ints(i as i64, 0), format!("p{}", i + 1));
            }
        }
        Family::Polygon => {
            for k in 1..=m {
                let t = ratio(k as i64, (m + 1 - k) as i64);
                push(circle_point(&t), format!("q{k}"));
            }
        }
        Family::T => {
            push(Point::from_ints(0, 1), "y".into());
            for i in 1..=m {
                push(Point::from_ints(i as i64, 0), format!("x{i}"));
            }
        }
        Family::U | Family::V => {
            y_axis(&mut push);
            if family == Family::V {
                push(Point::from_ints(0, 0), "z".into());
            }
            for i in 1..=m {
                push(Point::from_ints(i as i64, 0), format!("x{i}"));
            }
        }
        Family::S => {
            for j in (1..=n).rev() {
                let t = ratio((n + 1 - j) as i64, j as i64);
                push(circle_point(&t), format!("y{j}"));
            }
            for i in 0..=m + 1 {
                let x = ratio(2 * i as i64, (m + 1) as i64) - int(1);
                push(Point::new(x, int(0)), format!("x{i}"));
            }
        }
    }
    let tag = FamilyTag {
        family,
        m,
        n: if family.is_single_parameter() { 0 } else { n },
    };
    Configuration::build(points, Some(labels), tag)
}

/// Convex hull of a finite point set: a point, a segment, or a polygon with
/// vertices in counterclockwise order starting from the lexicographically
/// smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hull {
    vertices: Vec<Point>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HullKind {
    Point,
    Segment,
    Polygon,
}

impl Hull {
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn kind(&self) -> HullKind {
        match self.vertices.len() {
            1 => HullKind::Point,
            2 => HullKind::Segment,
            _ => HullKind::Polygon,
        }
    }

    /// Closed containment test.
    pub fn contains(&self, p: &Point) -> bool {
        match self.kind() {
            HullKind::Point => &self.vertices[0] == p,
            HullKind::Segment => on_closed_segment(&self.vertices[0], &self.vertices[1], p),
            HullKind::Polygon => {
                let k = self.vertices.len();
                (0..k).all(|i| {
                    orientation(&self.vertices[i], &self.vertices[(i + 1) % k], p)
                        != Ordering::Less
                })
            }
        }
    }

    /// Strict interior test; degenerate hulls have empty interior.
    pub fn strictly_contains(&self, p: &Point) -> bool {
        match self.kind() {
            HullKind::Polygon => {
                let k = self.vertices.len();
                (0..k).all(|i| {
                    orientation(&self.vertices[i], &self.vertices[(i + 1) % k], p)
                        == Ordering::Greater
                })
            }
            _ => false,
        }
    }
}

fn on_closed_segment(a: &Point, b: &Point, p: &Point) -> bool {
    orientation(a, b, p) == Ordering::Equal
        && p.x >= a.x.clone().min(b.x.clone())
        && p.x <= a.x.clone().max(b.x.clone())
        && p.y >= a.y.clone().min(b.y.clone())
        && p.y <= a.y.clone().max(b.y.clone())
}

/// Monotone-chain hull over a point list; collinear points are dropped from edges.
pub fn hull_of_points(points: &[Point]) -> Result<Hull> {
    if points.is_empty() {
        return Err(Error::EmptyBlock);
    }
    let mut sorted: Vec<&Point> = points.iter().collect();
    sorted.sort();
    sorted.dedup();
    if sorted.len() == 1 {
        return Ok(Hull {
            vertices: vec![sorted[0].clone()],
        });
    }
    let mut lower: Vec<&Point> = Vec::new();
    for &p in &sorted {
        while lower.len() >= 2
            && orientation(lower[lower.len() - 2], lower[lower.len() - 1], p) != Ordering::Greater
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<&Point> = Vec::new();
    for &p in sorted.iter().rev() {
        while upper.len() >= 2
            && orientation(upper[upper.len() - 2], upper[upper.len() - 1], p) != Ordering::Greater
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    Ok(Hull {
        vertices: lower.into_iter().cloned().collect(),
    })
}

/// Convex hull of the points of `config` at `block`.
pub fn convex_hull(config: &Configuration, block: &[usize]) -> Result<Hull> {
    let points = block
        .iter()
        .map(|&i| {
            config
                .points
                .get(i)
                .cloned()
                .ok_or(Error::IndexOutOfRange {
                    index: i,
                    len: config.len(),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    hull_of_points(&points)
}

type Vector = (BigRational, BigRational);

fn separating_axes(h: &Hull, axes: &mut Vec<Vector>) {
    let v = &h.vertices;
    match h.kind() {
        HullKind::Point => {}
        HullKind::Segment => {
            let d = v[1].sub(&v[0]);
            axes.push((-d.1.clone(), d.0.clone()));
            axes.push(d);
        }
        HullKind::Polygon => {
            for i in 0..v.len() {
                let d = v[(i + 1) % v.len()].sub(&v[i]);
                axes.push((-d.1, d.0));
            }
        }
    }
}

fn projection_range(h: &Hull, axis: &Vector) -> (BigRational, BigRational) {
    let mut values = h.vertices.iter().map(|p| &p.x * &axis.0 + &p.y * &axis.1);
    let first = values.next().expect("hull is nonempty");
    values.fold((first.clone(), first), |(lo, hi), v| {
        (lo.min(v.clone()), hi.max(v))
    })
}

/// `true` iff the two closed convex sets share no point.
///
/// Separating-axis test: the candidate axes are the edge normals of both hulls
/// plus the directions of degenerate (segment) hulls and, for two points, their
/// difference. Touching counts as intersecting.
pub fn hulls_disjoint(a: &Hull, b: &Hull) -> bool {
    let mut axes = Vec::new();
    separating_axes(a, &mut axes);
    separating_axes(b, &mut axes);
    if a.kind() == HullKind::Point && b.kind() == HullKind::Point {
        axes.push(b.vertices[0].sub(&a.vertices[0]));
    }
    axes.iter()
        .filter(|axis| !(axis.0.is_zero() && axis.1.is_zero()))
        .any(|axis| {
            let (alo, ahi) = projection_range(a, axis);
            let (blo, bhi) = projection_range(b, axis);
            ahi < blo || bhi < alo
        })
}

/// `true` iff no point of `config` lies in the interior of the hull of all its points.
pub fn on_convex_boundary(config: &Configuration) -> bool {
    if config.len() < 3 {
        return true;
    }
    let hull = hull_of_points(&config.points).expect("nonempty");
    !config.points.iter().any(|p| hull.strictly_contains(p))
}

/// Indices of the points that are vertices of the hull of all points.
pub fn hull_vertex_indices(config: &Configuration) -> Vec<usize> {
    if config.is_empty() {
        return Vec::new();
    }
    let hull = hull_of_points(&config.points).expect("nonempty");
    config
        .points
        .iter()
        .enumerate()
        .filter(|(_, p)| hull.vertices.contains(p))
        .map(|(i, _)| i)
        .collect()
}

/// Orientation table for a configuration, answering hull and disjointness
/// queries on index sets (bitmasks) without further rational arithmetic.
#[derive(Clone, Debug)]
pub struct Predicates {
    n: usize,
    orient: Vec<i8>,
    lex_order: Vec<usize>,
    lex_rank: Vec<usize>,
}

impl Predicates {
    pub fn new(config: &Configuration) -> Result<Self> {
        let n = config.len();
        if n > MAX_MASK_POINTS {
            return Err(Error::TooLarge {
                what: "configuration",
                size: n,
                cap: MAX_MASK_POINTS,
            });
        }
        let mut orient = vec![0i8; n * n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    orient[(a * n + b) * n + c] =
                        match orientation(config.point(a), config.point(b), config.point(c)) {
                            Ordering::Less => -1,
                            Ordering::Equal => 0,
                            Ordering::Greater => 1,
                        };
                }
            }
        }
        let mut lex_order: Vec<usize> = (0..n).collect();
        lex_order.sort_by(|&a, &b| config.point(a).cmp(config.point(b)));
        let mut lex_rank = vec![0; n];
        for (r, &i) in lex_order.iter().enumerate() {
            lex_rank[i] = r;
        }
        Ok(Predicates {
            n,
            orient,
            lex_order,
            lex_rank,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn orient(&self, a: usize, b: usize, c: usize) -> i8 {
        self.orient[(a * self.n + b) * self.n + c]
    }

    // p strictly inside segment ab, all three distinct
    #[inline]
    fn between(&self, a: usize, b: usize, p: usize) -> bool {
        if self.orient(a, b, p) != 0 {
            return false;
        }
        let (ra, rb, rp) = (self.lex_rank[a], self.lex_rank[b], self.lex_rank[p]);
        ra.min(rb) < rp && rp < ra.max(rb)
    }

    /// Hull vertices (counterclockwise) of the points in `mask`.
    pub fn hull(&self, mask: u64) -> Vec<usize> {
        let pts: Vec<usize> = self
            .lex_order
            .iter()
            .copied()
            .filter(|&i| mask >> i & 1 == 1)
            .collect();
        if pts.len() <= 1 {
            return pts;
        }
        let mut lower: Vec<usize> = Vec::with_capacity(pts.len());
        for &p in &pts {
            while lower.len() >= 2 && self.orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0
            {
                lower.pop();
            }
            lower.push(p);
        }
        let mut upper: Vec<usize> = Vec::with_capacity(pts.len());
        for &p in pts.iter().rev() {
            while upper.len() >= 2 && self.orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0
            {
                upper.pop();
            }
            upper.push(p);
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        lower
    }

    fn in_hull(&self, hull: &[usize], p: usize) -> bool {
        match hull.len() {
            0 => false,
            1 => hull[0] == p,
            2 => self.between(hull[0], hull[1], p),
            k => (0..k).all(|i| self.orient(hull[i], hull[(i + 1) % k], p) >= 0),
        }
    }

    fn segments_meet(&self, a: usize, b: usize, c: usize, d: usize) -> bool {
        let o1 = self.orient(a, b, c);
        let o2 = self.orient(a, b, d);
        let o3 = self.orient(c, d, a);
        let o4 = self.orient(c, d, b);
        if o1 * o2 < 0 && o3 * o4 < 0 {
            return true;
        }
        self.between(a, b, c) || self.between(a, b, d) || self.between(c, d, a) || self.between(c, d, b)
    }

    fn edges(hull: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = hull.len();
        let count = match k {
            0 | 1 => 0,
            2 => 1,
            _ => k,
        };
        (0..count).map(move |i| (hull[i], hull[(i + 1) % k]))
    }

    /// Disjointness of two hulls given by vertex lists over disjoint index sets.
    pub fn hulls_disjoint(&self, ha: &[usize], hb: &[usize]) -> bool {
        if ha.iter().any(|&p| self.in_hull(hb, p)) || hb.iter().any(|&p| self.in_hull(ha, p)) {
            return false;
        }
        for (a, b) in Self::edges(ha) {
            for (c, d) in Self::edges(hb) {
                if self.segments_meet(a, b, c, d) {
                    return false;
                }
            }
        }
        true
    }

    /// Disjointness of the hulls of two disjoint, nonempty index sets.
    pub fn blocks_disjoint(&self, a: u64, b: u64) -> bool {
        debug_assert_eq!(a & b, 0);
        self.hulls_disjoint(&self.hull(a), &self.hull(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(pts: &[(i64, i64)]) -> Configuration {
        Configuration::new(pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect(), None).unwrap()
    }

    fn hull_of(pts: &[(i64, i64)]) -> Hull {
        hull_of_points(&pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn construction_errors() {
        let c = cfg(&[(0, 0), (1, 0), (2, 0)]);
        assert_eq!(c.len(), 3);
        assert_eq!(c.family(), Family::Generic);
        let dup = Configuration::new(vec![Point::from_ints(0, 0), Point::from_ints(0, 0)], None);
        assert_eq!(dup, Err(Error::DuplicatePoint { first: 0, second: 1 }));
        let lab = Configuration::new(vec![Point::from_ints(0, 0)], Some(vec![]));
        assert!(matches!(lab, Err(Error::LabelMismatch { .. })));
        assert_eq!(Configuration::new(vec![], None), Err(Error::EmptyConfiguration));
        assert_eq!("W".parse::<Family>(), Err(Error::UnknownFamily("W".into())));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/6").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), int(-7));
        assert_eq!(parse_rational("1.4").unwrap(), ratio(7, 5));
        assert_eq!(parse_rational("-0.25").unwrap(), ratio(-1, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert_eq!(format_rational(&ratio(-3, 9)), "-1/3");
        assert_eq!(format_rational(&int(4)), "4");
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"points": [["1/2", 3], [0, "-1.5"]], "labels": ["a", "b"]}"#;
        let c = Configuration::from_json(text).unwrap();
        assert_eq!(c.point(0), &Point::from_ratios((1, 2), (3, 1)));
        assert_eq!(c.point(1), &Point::from_ratios((0, 1), (-3, 2)));
        let again = Configuration::from_json(&c.to_json()).unwrap();
        assert_eq!(again, c);
        let dup = r#"{"points": [[0,0],[0,0]]}"#;
        assert!(matches!(Configuration::from_json(dup), Err(Error::DuplicatePoint { .. })));
        assert!(matches!(Configuration::from_json("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn hull_degenerate_cases() {
        let c = cfg(&[(0, 0), (1, 0), (2, 0)]);
        let h = convex_hull(&c, &[0, 1, 2]).unwrap();
        assert_eq!(h.vertices(), &[Point::from_ints(0, 0), Point::from_ints(2, 0)]);
        let single = cfg(&[(3, 7)]);
        assert_eq!(convex_hull(&single, &[0]).unwrap().vertices(), &[Point::from_ints(3, 7)]);
        assert_eq!(convex_hull(&c, &[]), Err(Error::EmptyBlock));
    }

    // Quadratic-time oracle: a point is extreme iff it is not in the closed
    // hull of any triangle or segment formed by the others.
    fn extreme_points_oracle(pts: &[Point]) -> Vec<Point> {
        let mut out = Vec::new();
        'outer: for (i, p) in pts.iter().enumerate() {
            let others: Vec<&Point> = pts.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| q).collect();
            for a in 0..others.len() {
                for b in a + 1..others.len() {
                    if on_closed_segment(others[a], others[b], p) {
                        continue 'outer;
                    }
                    for c in b + 1..others.len() {
                        let (x, y, z) = (others[a], others[b], others[c]);
                        let o1 = orientation(x, y, p);
                        let o2 = orientation(y, z, p);
                        let o3 = orientation(z, x, p);
                        let all_ge = [o1, o2, o3].iter().all(|o| *o != Ordering::Less);
                        let all_le = [o1, o2, o3].iter().all(|o| *o != Ordering::Greater);
                        if orientation(x, y, z) != Ordering::Equal && (all_ge || all_le) {
                            continue 'outer;
                        }
                    }
                }
            }
            out.push(p.clone());
        }
        out.sort();
        out
    }

    #[test]
    fn square_hull_any_order_matches_oracle() {
        let square = [(0, 0), (2, 0), (2, 2), (0, 2), (1, 1), (1, 0)];
        let c = cfg(&square);
        let expected = vec![
            Point::from_ints(0, 0),
            Point::from_ints(2, 0),
            Point::from_ints(2, 2),
            Point::from_ints(0, 2),
        ];
        for perm in [[0, 1, 2, 3, 4, 5], [4, 3, 2, 1, 0, 5], [2, 5, 0, 4, 3, 1]] {
            let h = convex_hull(&c, &perm).unwrap();
            assert_eq!(h.vertices(), expected.as_slice());
        }
        let mut sorted = expected.clone();
        sorted.sort();
        assert_eq!(extreme_points_oracle(c.points()), sorted);
    }

    #[test]
    fn disjointness_examples() {
        let d1 = hull_of(&[(0, 0), (1, 1)]);
        let d2 = hull_of(&[(1, 0), (0, 1)]);
        assert!(!hulls_disjoint(&d1, &d2));
        assert!(hulls_disjoint(&hull_of(&[(0, 0)]), &hull_of(&[(1, 0), (2, 0)])));
        assert!(!hulls_disjoint(&hull_of(&[(0, 0), (2, 0)]), &hull_of(&[(1, 0)])));
        assert!(hulls_disjoint(&hull_of(&[(0, 0)]), &hull_of(&[(1, 1)])));
        assert!(hulls_disjoint(&hull_of(&[(0, 0), (1, 0)]), &hull_of(&[(2, 0), (3, 0)])));
        assert!(!hulls_disjoint(&hull_of(&[(0, 0), (2, 0)]), &hull_of(&[(2, 0), (3, 1)])));
        let tri = hull_of(&[(0, 0), (4, 0), (0, 4)]);
        assert!(!hulls_disjoint(&tri, &hull_of(&[(1, 1)])));
        assert!(!hulls_disjoint(&tri, &hull_of(&[(2, 2)])));
        assert!(hulls_disjoint(&tri, &hull_of(&[(3, 3)])));
        assert!(!hulls_disjoint(&tri, &hull_of(&[(3, 3), (1, 0)])));
    }

    #[test]
    fn boundary_test() {
        assert!(on_convex_boundary(&standard_config(Family::U, 3, 4).unwrap()));
        assert!(on_convex_boundary(&cfg(&[(0, 0), (5, 5)])));
        assert!(!on_convex_boundary(&cfg(&[(0, 0), (4, 0), (0, 4), (1, 1)])));
        assert!(on_convex_boundary(&cfg(&[(0, 0), (4, 0), (0, 4), (2, 0)])));
    }

    #[test]
    fn standard_families() {
        let u = standard_config(Family::U, 3, 4).unwrap();
        assert_eq!(u.len(), 7);
        let zero = BigRational::zero();
        assert_eq!(u.points().iter().filter(|p| p.y == zero).count(), 3);
        assert_eq!(u.points().iter().filter(|p| p.x == zero).count(), 4);
        assert!(!u.points().contains(&Point::from_ints(0, 0)));
        let v = standard_config(Family::V, 3, 4).unwrap();
        assert_eq!(v.len(), 8);
        assert!(v.points().contains(&Point::from_ints(0, 0)));
        let s = standard_config(Family::S, 0, 4).unwrap();
        assert_eq!(s.len(), 6);
        let q = standard_config(Family::Polygon, 4, 0).unwrap();
        assert_eq!(hull_vertex_indices(&q).len(), 4);
        let t = standard_config(Family::T, 4, 0).unwrap();
        assert_eq!(t.len(), 5);
        assert!(on_convex_boundary(&t));
        assert_eq!(standard_config(Family::Generic, 1, 1), Err(Error::UnknownFamily("generic".into())));
    }

    #[test]
    fn semicircle_points_on_unit_circle() {
        for m in 0..4 {
            for n in 0..6 {
                let s = standard_config(Family::S, m, n).unwrap();
                let one = BigRational::one();
                let on_circle = s.points().iter().filter(|p| &p.x * &p.x + &p.y * &p.y == one).count();
                // round side plus the two corners
                assert_eq!(on_circle, n + 2);
                assert!(on_convex_boundary(&s));
            }
        }
    }

    #[test]
    fn standard_configs_are_counterclockwise() {
        for (fam, m, n) in [(Family::U, 3, 2), (Family::V, 2, 3), (Family::S, 2, 3), (Family::T, 4, 0), (Family::Polygon, 6, 0)] {
            let c = standard_config(fam, m, n).unwrap();
            let hull = hull_vertex_indices(&c);
            // consecutive hull vertices in storage order turn left
            let k = hull.len();
            for i in 0..k {
                let (a, b, d) = (hull[i], hull[(i + 1) % k], hull[(i + 2) % k]);
                assert_eq!(orientation(c.point(a), c.point(b), c.point(d)), Ordering::Greater, "{fam:?}");
            }
            assert!(hull.contains(&0) && hull.contains(&(c.len() - 1)));
        }
    }

    #[test]
    fn table_route_agrees_on_fixed_cases() {
        let c = cfg(&[(0, 0), (2, 0), (2, 2), (0, 2), (1, 0), (1, 1)]);
        let pred = Predicates::new(&c).unwrap();
        for a in 1u64..64 {
            for b in 1u64..64 {
                if a & b != 0 {
                    continue;
                }
                let ia: Vec<usize> = (0..6).filter(|i| a >> i & 1 == 1).collect();
                let ib: Vec<usize> = (0..6).filter(|i| b >> i & 1 == 1).collect();
                let reference = hulls_disjoint(&convex_hull(&c, &ia).unwrap(), &convex_hull(&c, &ib).unwrap());
                assert_eq!(pred.blocks_disjoint(a, b), reference, "{ia:?} {ib:?}");
            }
        }
    }
}
