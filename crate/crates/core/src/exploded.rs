//! Finite windows of the exploded tableau.
//!
//! The exploded diagram of `λ` has one box at every point of
//! `W_1(λ) × W_2(λ)`, where `W_1 = W(λ)` and `W_2 = W(λ^t)`; the entry of a
//! box is the sum of its coordinates. The diagram is infinite towards the
//! lower left, but every set used here is entry-bounded, so a window with a
//! margin of `t` beyond `[−M_2, M_1] × [−M_1, M_2]` captures it.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::coding::{c_set_and_bounds, v_set, w_set, HalfInt, WSet};
use crate::error::Error;
use crate::partitions::Partition;
use crate::weights::WeightLedger;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RegionLabel {
    /// entry in `(t, ∞)`
    Delta,
    /// entry in `(0, t)`
    GammaPlus,
    /// entry in `(−t, 0)`
    GammaMinus,
    Other,
}

impl RegionLabel {
    pub fn of(entry: i64, t: u64) -> Self {
        let t = t as i64;
        if entry > t {
            RegionLabel::Delta
        } else if entry > 0 && entry < t {
            RegionLabel::GammaPlus
        } else if entry < 0 && entry > -t {
            RegionLabel::GammaMinus
        } else {
            RegionLabel::Other
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RegionLabel::Delta => "Delta",
            RegionLabel::GammaPlus => "Gamma+",
            RegionLabel::GammaMinus => "Gamma-",
            RegionLabel::Other => "other",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ExBox {
    pub x: HalfInt,
    pub y: HalfInt,
}

impl ExBox {
    pub fn new(x: HalfInt, y: HalfInt) -> Self {
        ExBox { x, y }
    }

    pub fn entry(&self) -> i64 {
        (self.x + self.y).to_int().expect("coordinates share a lattice")
    }

    pub fn translate(&self, dx: i64, dy: i64) -> Self {
        ExBox::new(self.x.step(dx), self.y.step(dy))
    }

    /// `(x, y) ↦ (−y, −x)`.
    pub fn fold(&self) -> Self {
        ExBox::new(-self.y, -self.x)
    }
}

/// One of the coordinate sets a selector may restrict an axis to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxisSet {
    W,
    V,
    WDagger,
    C,
    /// every point of the lattice
    All,
    /// `{M, M−1, …}` for this axis' `M`
    BelowTop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Selector {
    pub region: RegionLabel,
    pub x: AxisSet,
    pub y: AxisSet,
}

impl Selector {
    pub fn new(region: RegionLabel, x: AxisSet, y: AxisSet) -> Self {
        Selector { region, x, y }
    }

    /// The boxes of a region.
    pub fn boxes(region: RegionLabel) -> Self {
        Selector::new(region, AxisSet::W, AxisSet::W)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Axis {
    w: WSet,
    v: BTreeSet<HalfInt>,
    c: BTreeSet<HalfInt>,
    top: HalfInt,
}

impl Axis {
    fn new(lambda: &Partition, t: u64) -> Self {
        let w = w_set(lambda, t);
        let c = c_set_and_bounds(lambda, t);
        Axis {
            top: w.top(),
            v: v_set(lambda, t).into_iter().collect(),
            c: c.values.into_iter().collect(),
            w,
        }
    }

    fn contains(&self, set: AxisSet, p: HalfInt) -> bool {
        match set {
            AxisSet::W => self.w.contains(p),
            AxisSet::V => self.v.contains(&p),
            AxisSet::WDagger => self.w.contains(p) && !self.v.contains(&p),
            AxisSet::C => self.c.contains(&p),
            AxisSet::All => true,
            AxisSet::BelowTop => p <= self.top,
        }
    }

    fn upper(&self, set: AxisSet) -> Option<HalfInt> {
        match set {
            AxisSet::All => None,
            AxisSet::V => self.v.iter().next_back().copied(),
            AxisSet::C => self.c.iter().next_back().copied(),
            _ => Some(self.top),
        }
    }

    /// `Some(min)` for finite sets; `None` marks the empty set via `upper`.
    fn lower(&self, set: AxisSet) -> Option<HalfInt> {
        match set {
            AxisSet::V => self.v.iter().next().copied(),
            AxisSet::C => self.c.iter().next().copied(),
            _ => None,
        }
    }

    fn is_finite(set: AxisSet) -> bool {
        matches!(set, AxisSet::V | AxisSet::C)
    }
}

/// Boxes of the exploded tableau inside the canonical window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplodedWindow {
    lambda: Partition,
    t: u64,
    ax: Axis,
    ay: Axis,
    x_lo: HalfInt,
    y_lo: HalfInt,
    boxes: Vec<ExBox>,
}

pub fn build_window(lambda: &Partition, t: u64) -> ExplodedWindow {
    assert!(t >= 1, "build_window: t must be positive");
    let ax = Axis::new(lambda, t);
    let ay = Axis::new(&lambda.conjugate(), t);
    let ti = t as i64;
    let x_lo = (-ay.top).step(-ti);
    let y_lo = (-ax.top).step(-ti);
    let ys = ay.w.elements_down_to(y_lo);
    let boxes = ax
        .w
        .elements_down_to(x_lo)
        .into_iter()
        .flat_map(|x| ys.iter().map(move |&y| ExBox::new(x, y)))
        .collect();
    ExplodedWindow {
        lambda: lambda.clone(),
        t,
        ax,
        ay,
        x_lo,
        y_lo,
        boxes,
    }
}

fn span(lo: HalfInt, hi: HalfInt) -> impl DoubleEndedIterator<Item = HalfInt> {
    let n = (hi.doubled() - lo.doubled()) / 2;
    (0..=n).map(move |k| lo.step(k))
}

fn violation(relation: &str, b: ExBox) -> Error {
    Error::RelationViolation {
        relation: relation.to_string(),
        x: b.x.to_string(),
        y: b.y.to_string(),
    }
}

/// First element of the symmetric difference, if any.
fn compare_sets(relation: &str, a: &BTreeSet<ExBox>, b: &BTreeSet<ExBox>) -> Result<(), Error> {
    match a.symmetric_difference(b).next() {
        Some(&bad) => Err(violation(relation, bad)),
        None => Ok(()),
    }
}

impl ExplodedWindow {
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `(M_1, M_2)`.
    pub fn tops(&self) -> (HalfInt, HalfInt) {
        (self.ax.top, self.ay.top)
    }

    /// `([x_lo, M_1], [y_lo, M_2])`.
    pub fn ranges(&self) -> ((HalfInt, HalfInt), (HalfInt, HalfInt)) {
        ((self.x_lo, self.ax.top), (self.y_lo, self.ay.top))
    }

    /// All boxes in the window, by decreasing `x`, then decreasing `y`.
    pub fn boxes(&self) -> &[ExBox] {
        &self.boxes
    }

    pub fn region(&self, b: &ExBox) -> RegionLabel {
        RegionLabel::of(b.entry(), self.t)
    }

    pub fn is_box(&self, b: &ExBox) -> bool {
        self.ax.w.contains(b.x) && self.ay.w.contains(b.y)
    }

    pub fn boxes_in(&self, region: RegionLabel) -> BTreeSet<ExBox> {
        self.boxes
            .iter()
            .copied()
            .filter(|b| self.region(b) == region)
            .collect()
    }

    pub fn x_in(&self, set: AxisSet, x: HalfInt) -> bool {
        self.ax.contains(set, x)
    }

    pub fn y_in(&self, set: AxisSet, y: HalfInt) -> bool {
        self.ay.contains(set, y)
    }

    fn require_core(&self) -> Result<(), Error> {
        if self.lambda.is_t_core(self.t) {
            Ok(())
        } else {
            Err(Error::NotACore {
                partition: self.lambda.to_string(),
                t: self.t,
            })
        }
    }

    /// The boxes of `Δ` matched with the cells of `λ`, in row-major cell order.
    pub fn hook_entry_correspondence(&self) -> Vec<((usize, usize), ExBox)> {
        let s = HalfInt::shift(self.t);
        let conj = self.lambda.conjugate();
        self.lambda
            .cells()
            .map(|(i, j)| {
                let x = HalfInt::from_int(self.lambda.part(i) as i64 - i as i64) + s;
                let y = HalfInt::from_int(conj.part(j) as i64 - j as i64) + s;
                ((i, j), ExBox::new(x, y))
            })
            .collect()
    }

    /// Checks that the correspondence is a bijection onto `Δ` with entry `h + t`.
    pub fn check_hook_entries(&self) -> Result<(), Error> {
        let hooks = self.lambda.hooks();
        let pairs = self.hook_entry_correspondence();
        let t = self.t as i64;
        for (k, &(_, b)) in pairs.iter().enumerate() {
            if b.entry() != hooks[k] as i64 + t {
                return Err(violation("hook entry", b));
            }
        }
        let image: BTreeSet<ExBox> = pairs.iter().map(|&(_, b)| b).collect();
        if image.len() != pairs.len() {
            return Err(violation("hook entry injectivity", pairs[0].1));
        }
        compare_sets("hook entry", &image, &self.boxes_in(RegionLabel::Delta))
    }

    /// The indicator identity on `W × W†`, `W† × W`, `W × W ∖ V × V`,
    /// `W† × W†`, checked at every lattice point of the window, and the three
    /// translates of `Δ`.
    pub fn check_translation_relations(&self) -> Result<(), Error> {
        self.require_core()?;
        use AxisSet::{WDagger, V, W};
        let ind = |b: bool| b as i32;
        for x in span(self.x_lo, self.ax.top) {
            for y in span(self.y_lo, self.ay.top) {
                let xi = |s| self.ax.contains(s, x);
                let yi = |s| self.ay.contains(s, y);
                let lhs = ind(xi(W) && yi(WDagger)) + ind(xi(WDagger) && yi(W));
                let rhs = ind(xi(W) && yi(W) && !(xi(V) && yi(V))) + ind(xi(WDagger) && yi(WDagger));
                if lhs != rhs {
                    return Err(violation("indicator identity", ExBox::new(x, y)));
                }
            }
        }
        let delta = self.boxes_in(RegionLabel::Delta);
        let t = self.t as i64;
        let shifted = |dx, dy| -> BTreeSet<ExBox> { delta.iter().map(|b| b.translate(dx, dy)).collect() };
        let pick = |regions: &[RegionLabel], xs: AxisSet, ys: AxisSet| -> BTreeSet<ExBox> {
            self.boxes
                .iter()
                .copied()
                .filter(|b| regions.contains(&self.region(b)) && self.ax.contains(xs, b.x) && self.ay.contains(ys, b.y))
                .collect()
        };
        use RegionLabel::{Delta, GammaMinus, GammaPlus};
        compare_sets("shift (0,-t)", &shifted(0, -t), &pick(&[Delta, GammaPlus], W, WDagger))?;
        compare_sets("shift (-t,0)", &shifted(-t, 0), &pick(&[Delta, GammaPlus], WDagger, W))?;
        compare_sets(
            "shift (-t,-t)",
            &shifted(-t, -t),
            &pick(&[Delta, GammaPlus, GammaMinus], WDagger, WDagger),
        )
    }

    /// `(x, y) ↦ (−y, −x)` maps `Γ⁻ ∩ (W†_1 × W†_2)` onto `Γ⁺ ∩ (C_1 × C_2)`.
    pub fn check_fold(&self) -> Result<(), Error> {
        self.require_core()?;
        let source = self.select(Selector::new(RegionLabel::GammaMinus, AxisSet::WDagger, AxisSet::WDagger))?;
        let target = self.select(Selector::new(RegionLabel::GammaPlus, AxisSet::C, AxisSet::C))?;
        for b in &source {
            if b.fold().entry() != -b.entry() {
                return Err(violation("fold negates entries", *b));
            }
        }
        let image: BTreeSet<ExBox> = source.iter().map(ExBox::fold).collect();
        compare_sets("fold", &image, &target)
    }

    /// Lattice points matching a selector, or [`Error::InfiniteSelection`].
    pub fn select(&self, sel: Selector) -> Result<BTreeSet<ExBox>, Error> {
        let t = self.t as i64;
        let infinite = || Err(Error::InfiniteSelection(format!("{:?}", sel)));
        let (fx, fy) = (Axis::is_finite(sel.x), Axis::is_finite(sel.y));
        let (ux, uy) = (self.ax.upper(sel.x), self.ay.upper(sel.y));
        let all_x = sel.x == AxisSet::All;
        let all_y = sel.y == AxisSet::All;
        if (fx && ux.is_none()) || (fy && uy.is_none()) {
            return Ok(BTreeSet::new());
        }
        let (elo, ehi) = match sel.region {
            RegionLabel::Other if !(fx && fy) => return infinite(),
            RegionLabel::Delta if all_x || all_y => return infinite(),
            RegionLabel::GammaPlus | RegionLabel::GammaMinus if (all_x && !fy) || (all_y && !fx) => {
                return infinite()
            }
            RegionLabel::Delta => (t + 1, (ux.unwrap() + uy.unwrap()).to_int().unwrap()),
            RegionLabel::GammaPlus => (1, t - 1),
            RegionLabel::GammaMinus => (1 - t, -1),
            RegionLabel::Other => (0, 0),
        };
        let (lx, ly) = (self.ax.lower(sel.x), self.ay.lower(sel.y));
        let hi_x = ux.unwrap_or_else(|| HalfInt::from_int(ehi) - ly.unwrap());
        let hi_y = uy.unwrap_or_else(|| HalfInt::from_int(ehi) - lx.unwrap());
        let xr = (lx.unwrap_or(HalfInt::from_int(elo) - hi_y), hi_x);
        let yr = (ly.unwrap_or(HalfInt::from_int(elo) - hi_x), hi_y);
        let mut out = BTreeSet::new();
        for x in span(xr.0, xr.1) {
            if !self.ax.contains(sel.x, x) {
                continue;
            }
            for y in span(yr.0, yr.1) {
                let b = ExBox::new(x, y);
                if self.ay.contains(sel.y, y) && RegionLabel::of(b.entry(), self.t) == sel.region {
                    out.insert(b);
                }
            }
        }
        Ok(out)
    }

    /// `k ↦ #{selected points with entry k}`.
    pub fn region_ledger(&self, sel: Selector) -> Result<WeightLedger, Error> {
        let pts = self.select(sel)?;
        Ok(WeightLedger::from_pairs(pts.iter().map(|b| (b.entry(), 1))))
    }

    /// The ledger of `Γ⁻ ∩ (W† × W†)` is the entry-negated ledger of
    /// `Γ⁺ ∩ (C × C)`, and its count at `−i` is `β_i(λ)`.
    pub fn check_fold_ledger(&self) -> Result<(), Error> {
        self.require_core()?;
        let minus = self.region_ledger(Selector::new(RegionLabel::GammaMinus, AxisSet::WDagger, AxisSet::WDagger))?;
        let plus = self.region_ledger(Selector::new(RegionLabel::GammaPlus, AxisSet::C, AxisSet::C))?;
        let beta = self.lambda.beta_counts(self.t);
        let expected = WeightLedger::from_pairs(beta.iter().enumerate().map(|(i, &b)| (-(i as i64 + 1), b as i64)));
        if minus != plus.negate_arguments() || minus != expected {
            return Err(Error::RelationViolation {
                relation: "fold ledger".into(),
                x: minus.to_string(),
                y: expected.to_string(),
            });
        }
        Ok(())
    }

    /// `Γ⁺ ∩ (W_1 × {M_2, M_2−1, …})` over `Γ⁺ ∩ (ℤ' × C_2)` is `∏ τ(i)^{t−i}`,
    /// and so is `Γ⁺ ∩ (W_1 × W_2)` over `Γ⁺ ∩ (C_1 × C_2)`.
    pub fn check_triangle(&self) -> Result<(), Error> {
        self.require_core()?;
        let t = self.t as i64;
        let expected = WeightLedger::from_pairs((1..t).map(|i| (i, t - i)));
        let g = RegionLabel::GammaPlus;
        let rows = self.region_ledger(Selector::new(g, AxisSet::W, AxisSet::BelowTop))?;
        let cols = self.region_ledger(Selector::new(g, AxisSet::All, AxisSet::C))?;
        let boxes = self.region_ledger(Selector::boxes(g))?;
        let cc = self.region_ledger(Selector::new(g, AxisSet::C, AxisSet::C))?;
        for (name, got) in [("triangle", rows.divide(&cols)), ("full triangle", boxes.divide(&cc))] {
            if got != expected {
                return Err(Error::RelationViolation {
                    relation: name.into(),
                    x: got.to_string(),
                    y: expected.to_string(),
                });
            }
        }
        Ok(())
    }

    /// The hook-side ledger rewritten through the regions:
    /// `Δ ∩ (V × V)` times `Γ⁻ ∩ (W† × W†)` over `Γ⁺ ∖ (V × V)`.
    pub fn region_form_of_lhs(&self) -> Result<WeightLedger, Error> {
        let dv = self.region_ledger(Selector::new(RegionLabel::Delta, AxisSet::V, AxisSet::V))?;
        let gm = self.region_ledger(Selector::new(RegionLabel::GammaMinus, AxisSet::WDagger, AxisSet::WDagger))?;
        let gp = self.region_ledger(Selector::boxes(RegionLabel::GammaPlus))?;
        let gpv = self.region_ledger(Selector::new(RegionLabel::GammaPlus, AxisSet::V, AxisSet::V))?;
        Ok(dv.times(&gm).divide(&gp.divide(&gpv)))
    }

    /// Runs every geometric check on a `t`-core.
    pub fn check_all(&self) -> Result<(), Error> {
        self.check_hook_entries()?;
        self.check_translation_relations()?;
        self.check_fold()?;
        self.check_fold_ledger()?;
        self.check_triangle()?;
        let lhs = crate::weights::lhs_ledger(&self.lambda, self.t);
        let region = self.region_form_of_lhs()?;
        if lhs != region {
            return Err(Error::RelationViolation {
                relation: "region form".into(),
                x: region.to_string(),
                y: lhs.to_string(),
            });
        }
        Ok(())
    }

    fn label(&self, p: HalfInt, v: &BTreeSet<HalfInt>) -> String {
        if v.contains(&p) {
            format!("[{p}]")
        } else {
            p.to_string()
        }
    }

    /// Fixed-width grid, `x` increasing to the right and `y` upward.
    ///
    /// Boxes show their entry, with `*` on `Δ`; other lattice points show
    /// `.`, or `/` on the diagonals `x + y ∈ {−t, 0, t}`. `V` coordinates are
    /// bracketed on both axes.
    pub fn render_ascii(&self) -> String {
        let xs: Vec<HalfInt> = span(self.x_lo, self.ax.top).collect();
        let ys: Vec<HalfInt> = span(self.y_lo, self.ay.top).rev().collect();
        let xl: Vec<String> = xs.iter().map(|&x| self.label(x, &self.ax.v)).collect();
        let yl: Vec<String> = ys.iter().map(|&y| self.label(y, &self.ay.v)).collect();
        let cw = xl.iter().map(String::len).max().unwrap_or(1).max(4) + 1;
        let lw = yl.iter().map(String::len).max().unwrap_or(1);
        let t = self.t as i64;
        let mut out = String::new();
        let count = |r| self.boxes_in(r).len();
        let _ = writeln!(
            out,
            "lambda = {}  t = {}  Delta = {}  Gamma+ = {}  Gamma- = {}",
            self.lambda,
            self.t,
            count(RegionLabel::Delta),
            count(RegionLabel::GammaPlus),
            count(RegionLabel::GammaMinus)
        );
        for (y, label) in ys.iter().zip(&yl) {
            let mut line = format!("{label:>lw$} |");
            for &x in &xs {
                let b = ExBox::new(x, *y);
                let e = b.entry();
                let cell = if self.is_box(&b) {
                    let mark = if e > t { "*" } else { " " };
                    format!("{e}{mark}")
                } else if e == -t || e == 0 || e == t {
                    "/ ".to_string()
                } else {
                    ". ".to_string()
                };
                let _ = write!(line, "{cell:>cw$}");
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        let _ = writeln!(out, "{} +{}", " ".repeat(lw), "-".repeat(cw * xs.len()));
        let mut axis = format!("{}  ", " ".repeat(lw));
        for l in &xl {
            let _ = write!(axis, "{:>cw$}", format!("{l} "));
        }
        out.push_str(axis.trim_end());
        out.push('\n');
        out
    }

    /// SVG drawing at 12 px per lattice unit.
    pub fn render_svg(&self) -> String {
        const U: i64 = 12;
        let xs: Vec<HalfInt> = span(self.x_lo, self.ax.top).collect();
        let ys: Vec<HalfInt> = span(self.y_lo, self.ay.top).collect();
        let (w, h) = ((xs.len() as i64 + 2) * U, (ys.len() as i64 + 2) * U);
        let px = |x: HalfInt| (((x.doubled() - self.x_lo.doubled()) / 2) + 1) * U;
        let py = |y: HalfInt| (((self.ay.top.doubled() - y.doubled()) / 2) + 1) * U;
        let t = self.t as i64;
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}" font-family="monospace" font-size="5">"#
        );
        for &b in &self.boxes {
            let e = b.entry();
            let fill = match self.region(&b) {
                RegionLabel::Delta => "#bbbbbb",
                RegionLabel::GammaPlus => "#e8f0ff",
                RegionLabel::GammaMinus => "#fff0e0",
                RegionLabel::Other => "#ffffff",
            };
            let (x0, y0) = (px(b.x), py(b.y));
            let _ = writeln!(
                s,
                r##"<rect x="{x0}" y="{y0}" width="{U}" height="{U}" fill="{fill}" stroke="#000" stroke-width="0.3"/><text x="{}" y="{}" text-anchor="middle">{e}</text>"##,
                x0 + U / 2,
                y0 + 8
            );
        }
        // diagonals x + y = c through the window corners
        for c in [-t, 0, t] {
            let x1 = xs[0];
            let y1 = HalfInt::from_int(c) - x1;
            let x2 = xs[xs.len() - 1];
            let y2 = HalfInt::from_int(c) - x2;
            let _ = writeln!(
                s,
                r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#c00" stroke-width="0.6"/>"##,
                px(x1) + U / 2,
                py(y1) + U / 2,
                px(x2) + U / 2,
                py(y2) + U / 2
            );
        }
        for &x in &self.ax.v {
            let _ = writeln!(
                s,
                r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#00c" stroke-width="0.8"/>"##,
                px(x) + 2,
                h - 3,
                px(x) + U - 2,
                h - 3
            );
        }
        for &y in &self.ay.v {
            let _ = writeln!(
                s,
                r##"<line x1="2" y1="{}" x2="2" y2="{}" stroke="#00c" stroke-width="0.8"/>"##,
                py(y) + 2,
                py(y) + U - 2
            );
        }
        s.push_str("</svg>\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_t_cores;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn h(n: i64) -> HalfInt {
        HalfInt::from_int(n)
    }

    #[test]
    fn figure_one_box() {
        let w = build_window(&p("8,4,3,2,2,1"), 5);
        let b = ExBox::new(h(5), h(3));
        assert!(w.is_box(&b));
        assert_eq!(b.entry(), 8);
        assert_eq!(w.region(&b), RegionLabel::Delta);
        let pairs = w.hook_entry_correspondence();
        assert!(pairs.contains(&((2, 3), b)));
        assert_eq!(w.boxes_in(RegionLabel::Delta).len(), 20);
    }

    #[test]
    fn window_margins() {
        let w = build_window(&p("8,4,3,2,2,1"), 5);
        assert_eq!(w.tops(), (h(10), h(8)));
        assert_eq!(w.ranges(), ((h(-13), h(10)), (h(-15), h(8))));
    }

    #[test]
    fn empty_partition() {
        for t in 1..6 {
            let w = build_window(&Partition::empty(), t);
            assert!(w.boxes().iter().all(|b| b.entry() < t as i64));
            assert!(w.boxes_in(RegionLabel::Delta).is_empty());
            w.check_all().unwrap();
        }
    }

    #[test]
    fn delta_entries_are_hooks_plus_t() {
        let lam = p("6,3,3,2");
        let w = build_window(&lam, 5);
        let mut entries: Vec<i64> = w.boxes_in(RegionLabel::Delta).iter().map(ExBox::entry).collect();
        entries.sort_unstable();
        let mut expected = vec![7, 6, 9, 8, 6, 10, 9, 7, 14, 13, 11, 8, 7, 6];
        expected.sort_unstable();
        assert_eq!(entries, expected);
        assert_eq!(
            w.region_ledger(Selector::boxes(RegionLabel::Delta)).unwrap(),
            WeightLedger::from_pairs([(6, 3), (7, 3), (8, 2), (9, 2), (10, 1), (11, 1), (13, 1), (14, 1)])
        );
        w.check_hook_entries().unwrap();
    }

    #[test]
    fn no_entry_t_on_cores() {
        for lam in enumerate_t_cores(4, 15) {
            let w = build_window(&lam, 4);
            assert!(w.boxes().iter().all(|b| b.entry() != 4), "{lam}");
        }
    }

    #[test]
    fn gamma_minus_counts_small_hooks() {
        for lam in crate::partitions::partitions_up_to(8) {
            for t in 2..5 {
                let w = build_window(&lam, t);
                let small = lam.hooks().iter().filter(|&&x| x < t).count();
                let gm = w.select(Selector::new(RegionLabel::GammaMinus, AxisSet::WDagger, AxisSet::WDagger));
                if lam.is_t_core(t) {
                    assert_eq!(gm.unwrap().len(), small, "{lam} t={t}");
                }
            }
        }
    }

    #[test]
    fn base_coding_differences() {
        let w = build_window(&Partition::empty(), 5);
        let l = w
            .region_ledger(Selector::new(RegionLabel::GammaPlus, AxisSet::V, AxisSet::V))
            .unwrap();
        assert_eq!(l, WeightLedger::from_pairs([(1, 4), (2, 3), (3, 2), (4, 1)]));
    }

    #[test]
    fn running_example_relations() {
        let w = build_window(&p("8,4,3,2,2,1"), 5);
        w.check_all().unwrap();
        let w6 = build_window(&p("8,5,4,1,1,1"), 6);
        w6.check_all().unwrap();
        assert!(w6.render_ascii().contains("[21/2]"));
    }

    #[test]
    fn sweep_relations() {
        for t in 1..=7 {
            for lam in enumerate_t_cores(t, 15) {
                build_window(&lam, t).check_all().unwrap_or_else(|e| panic!("{lam} t={t}: {e}"));
            }
        }
    }

    #[test]
    fn infinite_selections() {
        let w = build_window(&p("3,1"), 3);
        let bad = [
            Selector::new(RegionLabel::Delta, AxisSet::All, AxisSet::W),
            Selector::new(RegionLabel::GammaPlus, AxisSet::All, AxisSet::W),
            Selector::new(RegionLabel::Other, AxisSet::W, AxisSet::W),
        ];
        for s in bad {
            assert!(matches!(w.select(s), Err(Error::InfiniteSelection(_))));
        }
        assert!(w.select(Selector::new(RegionLabel::GammaPlus, AxisSet::All, AxisSet::C)).is_ok());
        assert!(w.select(Selector::new(RegionLabel::Other, AxisSet::V, AxisSet::C)).is_ok());
    }

    #[test]
    fn non_core_is_rejected() {
        let w = build_window(&p("2"), 2);
        assert!(matches!(w.check_fold(), Err(Error::NotACore { .. })));
    }

    #[test]
    fn rendering() {
        let w = build_window(&p("8,4,3,2,2,1"), 5);
        let a = w.render_ascii();
        let row3 = a.lines().find(|l| l.trim_start().starts_with("[3] |") || l.trim_start().starts_with("3 |")).unwrap();
        assert!(row3.contains("8*"));
        assert_eq!(a, w.render_ascii());
        let e = build_window(&Partition::empty(), 3).render_ascii();
        assert!(!e.contains('*'));
        let s = w.render_svg();
        assert!(s.starts_with("<svg") && s.trim_end().ends_with("</svg>"));
    }
}
