//! Vertex colorings of trees and long-repetition-free verification.
//!
//! A coloring is long-repetition-free (LRF) when the color word read along
//! every path of the tree is long-square-free. Since every path extends to a
//! path between two degree-1 vertices and long-square-freeness passes to
//! factors, it suffices to inspect those maximal paths.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::trees::{RootedTree, TreeError, Vertex};
use crate::words::{
    contains_long_square, has_long_square_suffix, render_letters, SquareWitness, Word,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("a coloring needs at least 2 colors, got {k}")]
    TooFewColors { k: u8 },
    #[error("vertex {vertex} has color {color}, outside 0..{k}")]
    ColorOutOfRange { vertex: Vertex, color: u8, k: u8 },
    #[error("coloring covers {colors} vertices but the tree has {vertices}")]
    SizeMismatch { colors: usize, vertices: usize },
    #[error("word of length {len} cannot color a tree of height {height}; need {needed} letters")]
    WordTooShort {
        len: usize,
        height: usize,
        needed: usize,
    },
    #[error("word of length {len} does not match height {height} (need {needed} letters)")]
    LengthMismatch {
        len: usize,
        height: usize,
        needed: usize,
    },
    #[error("binary words need a 2-coloring, this coloring uses k = {k}")]
    NotBinary { k: u8 },
    #[error(transparent)]
    Tree(#[from] TreeError),
}

/// A total map from vertices `0..n` to colors `0..k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u8>,
    k: u8,
}

impl Coloring {
    pub fn new(colors: Vec<u8>, k: u8) -> Result<Self, ColoringError> {
        if k < 2 {
            return Err(ColoringError::TooFewColors { k });
        }
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(ColoringError::ColorOutOfRange { vertex, color, k });
        }
        Ok(Coloring { colors, k })
    }

    pub fn binary(colors: Vec<u8>) -> Result<Self, ColoringError> {
        Self::new(colors, 2)
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: Vertex) -> u8 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// Applies a color permutation: vertex colored `c` gets `perm[c]`.
    pub fn permuted(&self, perm: &[u8]) -> Coloring {
        assert_eq!(perm.len(), usize::from(self.k));
        Coloring {
            colors: self.colors.iter().map(|&c| perm[usize::from(c)]).collect(),
            k: self.k,
        }
    }

    pub fn check_fits(&self, tree: &RootedTree) -> Result<(), ColoringError> {
        if self.colors.len() == tree.len() {
            Ok(())
        } else {
            Err(ColoringError::SizeMismatch {
                colors: self.colors.len(),
                vertices: tree.len(),
            })
        }
    }

    fn require_binary(&self) -> Result<(), ColoringError> {
        if self.k == 2 {
            Ok(())
        } else {
            Err(ColoringError::NotBinary { k: self.k })
        }
    }
}

/// Colors every depth-`i` vertex with `a[i]`; the root takes `a[0]`.
pub fn generation_coloring(tree: &RootedTree, a: &Word) -> Result<Coloring, ColoringError> {
    let needed = tree.height() + 1;
    if a.len() < needed {
        return Err(ColoringError::WordTooShort {
            len: a.len(),
            height: tree.height(),
            needed,
        });
    }
    let colors = tree
        .vertices()
        .map(|v| a.letters()[tree.depth(v)])
        .collect();
    Coloring::binary(colors)
}

/// Colors along the path from `u` to `v`, for any number of colors.
pub fn path_letters(
    tree: &RootedTree,
    coloring: &Coloring,
    u: Vertex,
    v: Vertex,
) -> Result<Vec<u8>, ColoringError> {
    coloring.check_fits(tree)?;
    Ok(tree
        .path_between(u, v)?
        .into_iter()
        .map(|x| coloring.color(x))
        .collect())
}

/// The binary color word along the path from `u` to `v`.
pub fn path_word(
    tree: &RootedTree,
    coloring: &Coloring,
    u: Vertex,
    v: Vertex,
) -> Result<Word, ColoringError> {
    coloring.require_binary()?;
    let letters = path_letters(tree, coloring, u, v)?;
    Ok(Word::new(letters).expect("binary coloring"))
}

/// A path whose color word contains a long square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub path: Vec<Vertex>,
    pub word: Vec<u8>,
    pub square: SquareWitness,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("certificate path is empty")]
    EmptyPath,
    #[error("path vertex {vertex} is not in the tree")]
    UnknownVertex { vertex: Vertex },
    #[error("path vertices {a} and {b} are not adjacent")]
    NotAdjacent { a: Vertex, b: Vertex },
    #[error("vertex {vertex} repeats on the path")]
    RepeatedVertex { vertex: Vertex },
    #[error("word has {word} letters but the path has {path} vertices")]
    WordLength { word: usize, path: usize },
    #[error("letter {position} is {claimed} but vertex {vertex} has color {actual}")]
    WrongColor {
        position: usize,
        vertex: Vertex,
        claimed: u8,
        actual: u8,
    },
    #[error("no long square of period {period} at offset {offset} in the word")]
    NoSquare { offset: usize, period: usize },
}

impl Violation {
    /// Checks the certificate against the tree and coloring from scratch.
    pub fn reverify(&self, tree: &RootedTree, coloring: &Coloring) -> Result<(), CertificateError> {
        if self.path.is_empty() {
            return Err(CertificateError::EmptyPath);
        }
        if let Some(&vertex) = self
            .path
            .iter()
            .find(|&&v| v >= tree.len() || v >= coloring.len())
        {
            return Err(CertificateError::UnknownVertex { vertex });
        }
        for pair in self.path.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if tree.parent(a) != Some(b) && tree.parent(b) != Some(a) {
                return Err(CertificateError::NotAdjacent { a, b });
            }
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(&vertex) = self.path.iter().find(|&&v| !seen.insert(v)) {
            return Err(CertificateError::RepeatedVertex { vertex });
        }
        if self.word.len() != self.path.len() {
            return Err(CertificateError::WordLength {
                word: self.word.len(),
                path: self.path.len(),
            });
        }
        for (position, (&vertex, &claimed)) in self.path.iter().zip(&self.word).enumerate() {
            let actual = coloring.color(vertex);
            if actual != claimed {
                return Err(CertificateError::WrongColor {
                    position,
                    vertex,
                    claimed,
                    actual,
                });
            }
        }
        if !self.square.holds_in(&self.word) {
            return Err(CertificateError::NoSquare {
                offset: self.square.offset,
                period: self.square.period,
            });
        }
        Ok(())
    }

    fn on_path(tree: &RootedTree, coloring: &Coloring, u: Vertex, v: Vertex) -> Option<Self> {
        let path = tree.path_between(u, v).expect("valid vertices");
        let word: Vec<u8> = path.iter().map(|&x| coloring.color(x)).collect();
        contains_long_square(&word).map(|square| Violation { path, word, square })
    }
}

/// Outcome of a full LRF check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LrfCertificate {
    Valid,
    Violation(Violation),
}

impl LrfCertificate {
    pub fn is_valid(&self) -> bool {
        matches!(self, LrfCertificate::Valid)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            LrfCertificate::Valid => None,
            LrfCertificate::Violation(v) => Some(v),
        }
    }
}

impl fmt::Display for LrfCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LrfCertificate::Valid => writeln!(f, "verdict: VALID"),
            LrfCertificate::Violation(v) => {
                writeln!(f, "verdict: VIOLATION")?;
                let path: Vec<String> = v.path.iter().map(ToString::to_string).collect();
                writeln!(f, "path: {}", path.join(" "))?;
                writeln!(f, "word: {}", render_letters(&v.word))?;
                writeln!(f, "offset: {}", v.square.offset)?;
                writeln!(f, "period: {}", v.square.period)
            }
        }
    }
}

/// Smallest degree-1 vertex `v > u` whose path from `u` has a long square.
fn first_violating_partner(
    tree: &RootedTree,
    colors: &[u8],
    u: Vertex,
    is_leaf: &[bool],
) -> Option<Vertex> {
    let mut best: Option<Vertex> = None;
    let mut word: Vec<u8> = Vec::new();
    // (vertex, came from, word length before this vertex, violation seen so far)
    let mut stack = vec![(u, usize::MAX, 0usize, false)];
    while let Some((x, from, len, flagged)) = stack.pop() {
        word.truncate(len);
        word.push(colors[x]);
        let flagged = flagged || has_long_square_suffix(&word);
        if flagged && x > u && is_leaf[x] && best.is_none_or(|b| x < b) {
            best = Some(x);
        }
        for y in tree.neighbors(x) {
            if y != from {
                stack.push((y, x, len + 1, flagged));
            }
        }
    }
    best
}

/// Full LRF verification over all maximal paths. A violation is reported for
/// the lexicographically first pair of degree-1 endpoints, with the first
/// long square in that path's word.
pub fn verify_lrf(tree: &RootedTree, coloring: &Coloring) -> Result<LrfCertificate, ColoringError> {
    coloring.check_fits(tree)?;
    let leaves = tree.leaves();
    let mut is_leaf = vec![false; tree.len()];
    for &l in &leaves {
        is_leaf[l] = true;
    }
    let colors = coloring.colors();
    let found = leaves
        .par_iter()
        .find_map_first(|&u| first_violating_partner(tree, colors, u, &is_leaf).map(|v| (u, v)));
    Ok(match found {
        None => LrfCertificate::Valid,
        Some((u, v)) => LrfCertificate::Violation(
            Violation::on_path(tree, coloring, u, v).expect("partner search found a square"),
        ),
    })
}

/// Cross-check oracle: scans the path between every pair of vertices.
pub fn verify_lrf_all_pairs(
    tree: &RootedTree,
    coloring: &Coloring,
) -> Result<LrfCertificate, ColoringError> {
    coloring.check_fits(tree)?;
    for u in tree.vertices() {
        for v in u + 1..tree.len() {
            if let Some(violation) = Violation::on_path(tree, coloring, u, v) {
                return Ok(LrfCertificate::Violation(violation));
            }
        }
    }
    Ok(LrfCertificate::Valid)
}

/// Result of the sampled fast mode. Finding no violation proves nothing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampledCheck {
    pub pairs_checked: usize,
    pub violation: Option<Violation>,
}

/// Checks `samples` random pairs of degree-1 vertices.
pub fn verify_lrf_sampled(
    tree: &RootedTree,
    coloring: &Coloring,
    samples: usize,
    seed: u64,
) -> Result<SampledCheck, ColoringError> {
    coloring.check_fits(tree)?;
    let leaves = tree.leaves();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs_checked = 0;
    if leaves.len() >= 2 {
        for _ in 0..samples {
            let pick: Vec<_> = leaves.choose_multiple(&mut rng, 2).copied().collect();
            pairs_checked += 1;
            let (u, v) = (pick[0].min(pick[1]), pick[0].max(pick[1]));
            if let Some(violation) = Violation::on_path(tree, coloring, u, v) {
                return Ok(SampledCheck {
                    pairs_checked,
                    violation: Some(violation),
                });
            }
        }
    }
    Ok(SampledCheck {
        pairs_checked,
        violation: None,
    })
}

/// Where a path under a generation coloring changes direction, if it does.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathShape {
    /// Climbs from depth `from` to depth `turn`, then descends through a
    /// different child to depth `to`.
    Turn { turn: usize, from: usize, to: usize },
    /// Stays on one root-ward chain between depths `start <= end`.
    Monotone { start: usize, end: usize },
}

impl PathShape {
    /// The color word this shape reads under generation coloring `a`.
    pub fn word(&self, a: &[u8]) -> Vec<u8> {
        match *self {
            PathShape::Turn { turn, from, to } => a[turn..=from]
                .iter()
                .rev()
                .chain(&a[turn + 1..=to])
                .copied()
                .collect(),
            PathShape::Monotone { start, end } => a[start..=end].to_vec(),
        }
    }

    /// A smallest tree (a broom with two bristles) that realizes this shape
    /// under a generation coloring, together with the path's endpoints.
    pub fn realizing_tree(&self) -> (RootedTree, Vertex, Vertex) {
        match *self {
            PathShape::Monotone { start, end } => (RootedTree::path(end + 1), start, end),
            PathShape::Turn { turn, from, to } => {
                // Handle 0..=turn, then two branches hanging off vertex `turn`.
                let mut parents: Vec<Option<Vertex>> =
                    (0..=turn).map(|i| i.checked_sub(1)).collect();
                let mut branch = |len: usize| {
                    let mut prev = turn;
                    for _ in 0..len {
                        parents.push(Some(prev));
                        prev = parents.len() - 1;
                    }
                    prev
                };
                let a = branch(from - turn);
                let b = branch(to - turn);
                let tree = RootedTree::from_parents(&parents).expect("a broom is a tree");
                (tree, a, b)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionViolation {
    pub shape: PathShape,
    pub word: Vec<u8>,
    pub square: SquareWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub height: usize,
    pub turn_words: usize,
    pub monotone_words: usize,
    pub violation: Option<ReductionViolation>,
}

impl ReductionReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Decides whether the generation coloring by `a` is LRF on every tree of
/// height at most `h` by checking each realizable path shape once.
pub fn turn_word_reduction(a: &Word, h: usize) -> Result<ReductionReport, ColoringError> {
    if a.len() != h + 1 {
        return Err(ColoringError::LengthMismatch {
            len: a.len(),
            height: h,
            needed: h + 1,
        });
    }
    let turns = (0..h).flat_map(|turn| {
        (turn + 1..=h)
            .flat_map(move |from| (turn + 1..=h).map(move |to| PathShape::Turn { turn, from, to }))
    });
    let monotone =
        (0..=h).flat_map(|start| (start..=h).map(move |end| PathShape::Monotone { start, end }));

    let mut report = ReductionReport {
        height: h,
        turn_words: 0,
        monotone_words: 0,
        violation: None,
    };
    for shape in turns.chain(monotone) {
        match shape {
            PathShape::Turn { .. } => report.turn_words += 1,
            PathShape::Monotone { .. } => report.monotone_words += 1,
        }
        if report.violation.is_some() {
            continue;
        }
        let word = shape.word(a.letters());
        if let Some(square) = contains_long_square(&word) {
            report.violation = Some(ReductionViolation {
                shape,
                word,
                square,
            });
        }
    }
    Ok(report)
}
