//! Generation-monochromatic binary subtrees and the reflection argument.
//!
//! In a 2-colored host tree, every vertex with enough children has two whose
//! extracted binary subtrees carry identical generation colors; gluing the
//! pair under their parent grows the extraction by one level. Once the
//! generation word is long enough to contain a long palindrome, reading that
//! palindrome up one branch and down its sibling yields a long square on a
//! real path of the host.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::coloring::{Coloring, ColoringError, Violation};
use crate::trees::{RootedTree, Vertex};
use crate::words::{
    contains_long_palindrome, contains_long_square, render_letters, PalindromeWitness,
    SquareWitness, Word, PALINDROME_FORCING_LENGTH,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PigeonholeError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(
        "generation word has length {len}; reflection needs at least {PALINDROME_FORCING_LENGTH} \
         letters, the length from which every binary word has a long palindrome"
    )]
    WordTooShort { len: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("embedded root is vertex {found}, host root is {expected}")]
    WrongRoot { expected: Vertex, found: Vertex },
    #[error("position {address} maps to vertex {vertex}, which is not a child of {parent}")]
    NotAChild {
        address: String,
        vertex: Vertex,
        parent: Vertex,
    },
    #[error("both children of position {address} map to vertex {vertex}")]
    SameChild { address: String, vertex: Vertex },
    #[error("position {address} has color {actual}, generation {generation} records {expected}")]
    OffColor {
        address: String,
        generation: usize,
        expected: u8,
        actual: u8,
    },
    #[error("embedding has {found} positions, a binary tree of height {height} needs {expected}")]
    WrongSize {
        height: usize,
        expected: usize,
        found: usize,
    },
}

/// A complete binary tree of height `n` mapped into a host tree, root to root.
///
/// Positions are stored in heap order: position `i` has children `2i + 1`
/// (L) and `2i + 2` (R).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedBinaryTree {
    height: usize,
    nodes: Vec<Vertex>,
    /// Colors of generations `0..height`.
    generation_word: Word,
    /// Color shared by the leaf generation `height`.
    leaf_color: u8,
}

/// `L`/`R` address of a heap position; the root is `-`.
pub fn address_of(mut position: usize) -> String {
    if position == 0 {
        return "-".to_owned();
    }
    let mut letters = Vec::new();
    while position > 0 {
        letters.push(if position % 2 == 1 { 'L' } else { 'R' });
        position = (position - 1) / 2;
    }
    letters.iter().rev().collect()
}

fn generation_of(position: usize) -> usize {
    (usize::BITS - 1 - (position + 1).leading_zeros()) as usize
}

impl EmbeddedBinaryTree {
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn generation_word(&self) -> &Word {
        &self.generation_word
    }

    pub fn leaf_color(&self) -> u8 {
        self.leaf_color
    }

    pub fn positions(&self) -> usize {
        self.nodes.len()
    }

    pub fn host_vertex(&self, position: usize) -> Vertex {
        self.nodes[position]
    }

    /// Heap position reached from the root by following `address`.
    pub fn position(&self, address: &str) -> Option<usize> {
        let mut p = 0;
        for ch in address.chars().filter(|&c| c != '-') {
            p = match ch {
                'L' => 2 * p + 1,
                'R' => 2 * p + 2,
                _ => return None,
            };
        }
        (p < self.nodes.len()).then_some(p)
    }

    /// Host vertices along the all-left branch, generations `0..=height`.
    pub fn left_spine(&self) -> Vec<Vertex> {
        let mut spine = vec![self.nodes[0]];
        let mut p = 0;
        while 2 * p + 1 < self.nodes.len() {
            p = 2 * p + 1;
            spine.push(self.nodes[p]);
        }
        spine
    }

    fn expected_color(&self, generation: usize) -> u8 {
        if generation < self.height {
            self.generation_word.letters()[generation]
        } else {
            self.leaf_color
        }
    }

    /// Checks the embedding against the host and coloring without reference
    /// to how it was built.
    pub fn reverify(&self, tree: &RootedTree, coloring: &Coloring) -> Result<(), EmbeddingError> {
        let expected = (1usize << (self.height + 1)) - 1;
        if self.nodes.len() != expected || self.generation_word.len() != self.height {
            return Err(EmbeddingError::WrongSize {
                height: self.height,
                expected,
                found: self.nodes.len(),
            });
        }
        if self.nodes[0] != tree.root() {
            return Err(EmbeddingError::WrongRoot {
                expected: tree.root(),
                found: self.nodes[0],
            });
        }
        for position in 1..self.nodes.len() {
            let parent = self.nodes[(position - 1) / 2];
            let vertex = self.nodes[position];
            if vertex >= tree.len() || tree.parent(vertex) != Some(parent) {
                return Err(EmbeddingError::NotAChild {
                    address: address_of(position),
                    vertex,
                    parent,
                });
            }
            if position % 2 == 0 && self.nodes[position - 1] == vertex {
                return Err(EmbeddingError::SameChild {
                    address: address_of((position - 1) / 2),
                    vertex,
                });
            }
        }
        for (position, &vertex) in self.nodes.iter().enumerate() {
            let generation = generation_of(position);
            let expected = self.expected_color(generation);
            let actual = coloring.color(vertex);
            if actual != expected {
                return Err(EmbeddingError::OffColor {
                    address: address_of(position),
                    generation,
                    expected,
                    actual,
                });
            }
        }
        Ok(())
    }

    /// One line per position: `<address> <host-vertex-id> <color>`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (position, &vertex) in self.nodes.iter().enumerate() {
            let color = self.expected_color(generation_of(position));
            out.push_str(&format!("{} {} {}\n", address_of(position), vertex, color));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureReason {
    /// The vertex has fewer than two children but is above the target height.
    TooFewChildren { children: usize },
    /// Fewer than two child subtrees could be extracted at all.
    TooFewExtracted { extracted: usize, children: usize },
    /// Enough child subtrees were extracted but no two share a signature.
    DistinctSignatures { extracted: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionFailure {
    pub depth: usize,
    pub vertex: Vertex,
    pub reason: FailureReason,
}

impl fmt::Display for ExtractionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "extraction failed at depth {} (vertex {}): ",
            self.depth, self.vertex
        )?;
        match self.reason {
            FailureReason::TooFewChildren { children } => {
                write!(f, "{children} children, need at least 2")
            }
            FailureReason::TooFewExtracted {
                extracted,
                children,
            } => write!(f, "only {extracted} of {children} child subtrees extracted"),
            FailureReason::DistinctSignatures { extracted } => write!(
                f,
                "all {extracted} extracted child subtrees have distinct signatures"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtractionOutcome {
    Success(EmbeddedBinaryTree),
    Failure(ExtractionFailure),
}

/// Per-vertex extraction summary: colors of generations `0..=h` of the
/// extracted subtree (leaf generation included) and the chosen child pair.
struct Extracted {
    word: Vec<u8>,
    pair: Option<(Vertex, Vertex)>,
}

/// Lexicographically smallest pair of child ids whose signatures agree.
fn duplicate_pair<'a>(
    candidates: impl Iterator<Item = (Vertex, &'a [u8])>,
) -> Option<(Vertex, Vertex)> {
    let mut by_signature: BTreeMap<&[u8], Vec<Vertex>> = BTreeMap::new();
    for (child, signature) in candidates {
        by_signature.entry(signature).or_default().push(child);
    }
    by_signature
        .values()
        .filter(|ids| ids.len() >= 2)
        .map(|ids| (ids[0], ids[1]))
        .min()
}

/// Extracts a complete binary subtree of the host's height, rooted at the
/// host root, in which every generation is monochromatic.
///
/// The signature of a child is the color sequence of its own extracted
/// subtree, generation by generation down to the leaves; two children with
/// equal signatures can be glued under their parent. Ties are broken by the
/// smallest pair of child ids.
pub fn extract_binary_subtree(
    tree: &RootedTree,
    coloring: &Coloring,
) -> Result<ExtractionOutcome, PigeonholeError> {
    coloring.check_fits(tree)?;
    if coloring.k() != 2 {
        return Err(ColoringError::NotBinary { k: coloring.k() }.into());
    }
    let n = tree.height();
    let mut state: Vec<Option<Result<Extracted, ExtractionFailure>>> =
        (0..tree.len()).map(|_| None).collect();

    for &v in tree.bfs_order().iter().rev() {
        let depth = tree.depth(v);
        let color = coloring.color(v);
        let result = if depth == n {
            Ok(Extracted {
                word: vec![color],
                pair: None,
            })
        } else {
            let children = tree.children(v);
            let extracted: Vec<(Vertex, &[u8])> = children
                .iter()
                .filter_map(|&c| match &state[c] {
                    Some(Ok(e)) => Some((c, e.word.as_slice())),
                    _ => None,
                })
                .collect();
            let fail = |reason| ExtractionFailure {
                depth,
                vertex: v,
                reason,
            };
            if children.len() < 2 {
                Err(fail(FailureReason::TooFewChildren {
                    children: children.len(),
                }))
            } else if extracted.len() < 2 {
                Err(fail(FailureReason::TooFewExtracted {
                    extracted: extracted.len(),
                    children: children.len(),
                }))
            } else {
                match duplicate_pair(extracted.iter().copied()) {
                    None => Err(fail(FailureReason::DistinctSignatures {
                        extracted: extracted.len(),
                    })),
                    Some((a, b)) => {
                        let mut word = vec![color];
                        word.extend_from_slice(extracted.iter().find(|e| e.0 == a).unwrap().1);
                        Ok(Extracted {
                            word,
                            pair: Some((a, b)),
                        })
                    }
                }
            }
        };
        state[v] = Some(result);
    }

    let root_word = match state[tree.root()].as_ref().expect("root processed") {
        Err(failure) => return Ok(ExtractionOutcome::Failure(failure.clone())),
        Ok(e) => e.word.clone(),
    };
    let mut nodes = vec![tree.root()];
    for position in 0..(1usize << n) - 1 {
        let host = nodes[position];
        match &state[host] {
            Some(Ok(Extracted {
                pair: Some((a, b)), ..
            })) => {
                nodes.push(*a);
                nodes.push(*b);
            }
            _ => unreachable!("internal positions map to paired vertices"),
        }
    }
    let embedded = EmbeddedBinaryTree {
        height: n,
        nodes,
        generation_word: Word::new(root_word[..n].to_vec()).expect("binary coloring"),
        leaf_color: root_word[n],
    };
    debug_assert_eq!(embedded.reverify(tree, coloring), Ok(()));
    Ok(ExtractionOutcome::Success(embedded))
}

/// The shape of the reflected word `c`, with `c1 = c[0]` and `c2` the other
/// letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReflectionShape {
    /// Palindrome `xxxx`: `c1 c1 c1 c1 c1 c1 c1`.
    FourConstant,
    /// Palindrome `xyyx`: `c1 c2 c2 c1 c2 c2 c1`.
    FourSplit,
    /// Palindrome `xxxxx`: `c1` nine times.
    FiveConstant,
    /// Palindrome `xyxyx`: `c1 c2 c1 c2 c1 c2 c1 c2 c1`.
    FiveAlternating,
    /// Palindrome `xxyxx`: `c1 c1 c2 c1 c1 c1 c2 c1 c1`.
    FiveCentered,
    /// Palindrome `xyyyx`: `c1 c2 c2 c2 c1 c2 c2 c2 c1`.
    FiveRun,
}

impl ReflectionShape {
    /// The shape as a pattern over `1` (for `c1`) and `2` (for `c2`).
    pub fn pattern(&self) -> &'static str {
        match self {
            ReflectionShape::FourConstant => "1111111",
            ReflectionShape::FourSplit => "1221221",
            ReflectionShape::FiveConstant => "111111111",
            ReflectionShape::FiveAlternating => "121212121",
            ReflectionShape::FiveCentered => "112111211",
            ReflectionShape::FiveRun => "122212221",
        }
    }

    fn classify(palindrome: &[u8]) -> Self {
        match palindrome {
            [x, y, ..] if palindrome.len() == 4 => {
                if x == y {
                    ReflectionShape::FourConstant
                } else {
                    ReflectionShape::FourSplit
                }
            }
            [x, y, z, ..] => match (x == y, x == z) {
                (true, true) => ReflectionShape::FiveConstant,
                (false, true) => ReflectionShape::FiveAlternating,
                (true, false) => ReflectionShape::FiveCentered,
                (false, false) => ReflectionShape::FiveRun,
            },
            _ => unreachable!("palindrome witnesses have length 4 or 5"),
        }
    }

    /// Whether `word` spells this shape for some choice of `c1 != c2`.
    pub fn matches(&self, word: &[u8]) -> bool {
        let pattern = self.pattern().as_bytes();
        pattern.len() == word.len()
            && word.iter().zip(pattern).all(|(&letter, &p)| {
                if p == b'1' {
                    letter == word[0]
                } else {
                    letter != word[0]
                }
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reflection {
    /// The long palindrome `b[j..=j+m]` that was reflected.
    pub palindrome: PalindromeWitness,
    /// `b[j+m] .. b[j+1] b[j] b[j+1] .. b[j+m]`, of length `2m + 1`.
    pub reflected: Word,
    pub square: SquareWitness,
    pub shape: ReflectionShape,
}

/// Reflects the first long palindrome of `b` about its first letter and
/// returns the long square that appears.
pub fn reflect_word(b: &Word) -> Result<Reflection, PigeonholeError> {
    if b.len() < PALINDROME_FORCING_LENGTH {
        return Err(PigeonholeError::WordTooShort { len: b.len() });
    }
    let palindrome =
        contains_long_palindrome(b.letters()).expect("every binary word of length 9 has one");
    let (j, m) = (palindrome.offset, palindrome.length - 1);
    let span = &b.letters()[j..=j + m];
    let letters: Vec<u8> = span.iter().rev().chain(&span[1..]).copied().collect();
    let square = contains_long_square(&letters).expect("reflection of a long palindrome");
    Ok(Reflection {
        palindrome,
        reflected: Word::new(letters).expect("binary"),
        square,
        shape: ReflectionShape::classify(span),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotRefuted {
    ExtractionFailed(ExtractionFailure),
    WordTooShort { len: usize },
}

impl fmt::Display for NotRefuted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotRefuted::ExtractionFailed(failure) => failure.fmt(f),
            NotRefuted::WordTooShort { len } => write!(
                f,
                "generation word length {len} < {PALINDROME_FORCING_LENGTH}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RefuteOutcome {
    Refuted {
        violation: Violation,
        embedding: EmbeddedBinaryTree,
        reflection: Reflection,
    },
    NotRefuted(NotRefuted),
}

/// Extracts, reflects and materializes a long-square path in the host.
/// `NotRefuted` means the method is inconclusive, not that the coloring is
/// long-repetition-free.
pub fn refute(tree: &RootedTree, coloring: &Coloring) -> Result<RefuteOutcome, PigeonholeError> {
    let embedding = match extract_binary_subtree(tree, coloring)? {
        ExtractionOutcome::Failure(failure) => {
            return Ok(RefuteOutcome::NotRefuted(NotRefuted::ExtractionFailed(
                failure,
            )))
        }
        ExtractionOutcome::Success(e) => e,
    };
    let len = embedding.generation_word().len();
    if len < PALINDROME_FORCING_LENGTH {
        return Ok(RefuteOutcome::NotRefuted(NotRefuted::WordTooShort { len }));
    }
    let reflection = reflect_word(embedding.generation_word())?;
    let (j, m) = (
        reflection.palindrome.offset,
        reflection.palindrome.length - 1,
    );

    // Turning vertex on the left spine at generation j; leave it once to the
    // left and once to the right, then keep going left down to generation j + m.
    let turn = (0..j).fold(0, |p, _| 2 * p + 1);
    let descend = |first: usize| (1..m).fold(first, |p, _| 2 * p + 1);
    let start = embedding.host_vertex(descend(2 * turn + 1));
    let end = embedding.host_vertex(descend(2 * turn + 2));

    let path = tree.path_between(start, end).map_err(ColoringError::from)?;
    let word: Vec<u8> = path.iter().map(|&v| coloring.color(v)).collect();
    debug_assert_eq!(word, reflection.reflected.letters());
    let square = contains_long_square(&word).expect("reflected word has a long square");
    let violation = Violation { path, word, square };
    debug_assert_eq!(violation.reverify(tree, coloring), Ok(()));
    Ok(RefuteOutcome::Refuted {
        violation,
        embedding,
        reflection,
    })
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "palindrome at {} length {}, reflected {} ({}), square offset {} period {}",
            self.palindrome.offset,
            self.palindrome.length,
            self.reflected,
            self.shape.pattern(),
            self.square.offset,
            self.square.period
        )
    }
}

/// Renders a generation word and leaf color for reports.
pub fn describe_embedding(e: &EmbeddedBinaryTree) -> String {
    format!(
        "{} + leaves {}",
        render_letters(e.generation_word().letters()),
        e.leaf_color()
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{build_tyler, TylerSpec};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn addresses() {
        assert_eq!(address_of(0), "-");
        assert_eq!(address_of(1), "L");
        assert_eq!(address_of(2), "R");
        assert_eq!(address_of(5), "RL");
        assert_eq!(generation_of(0), 0);
        assert_eq!(generation_of(2), 1);
        assert_eq!(generation_of(6), 2);
        assert_eq!(generation_of(7), 3);
    }

    #[test]
    fn t1_picks_the_two_zero_children() {
        let t1 = RootedTree::star(3);
        let c = Coloring::binary(vec![1, 0, 1, 0]).unwrap();
        let ExtractionOutcome::Success(e) = extract_binary_subtree(&t1, &c).unwrap() else {
            panic!("T_1 always extracts");
        };
        assert_eq!((e.host_vertex(1), e.host_vertex(2)), (1, 3));
        assert_eq!(e.generation_word(), &w("1"));
        assert_eq!(e.leaf_color(), 0);
        assert_eq!(e.dump(), "- 0 1\nL 1 0\nR 3 0\n");
        e.reverify(&t1, &c).unwrap();
    }

    #[test]
    fn tie_break_is_lexicographic_over_pairs() {
        // Child signatures: 1 -> 0, 2 -> 1, 3 -> 1, 4 -> 0. Pairs (1,4) and
        // (2,3) both qualify; (1,4) is smaller.
        let t = RootedTree::star(4);
        let c = Coloring::binary(vec![0, 0, 1, 1, 0]).unwrap();
        let ExtractionOutcome::Success(e) = extract_binary_subtree(&t, &c).unwrap() else {
            panic!()
        };
        assert_eq!((e.host_vertex(1), e.host_vertex(2)), (1, 4));
    }

    fn four_distinct_signatures() -> (RootedTree, Coloring) {
        // Root 0; children 1..=4 each with two leaf children. Child colors and
        // grandchild colors spell 00, 01, 10, 11.
        let mut parents = vec![None, Some(0), Some(0), Some(0), Some(0)];
        for c in 1..=4 {
            parents.extend([Some(c), Some(c)]);
        }
        let tree = RootedTree::from_parents(&parents).unwrap();
        let mut colors = vec![0, 0, 0, 1, 1];
        for sig in [0, 1, 0, 1] {
            colors.extend([sig, sig]);
        }
        (tree, Coloring::binary(colors).unwrap())
    }

    #[test]
    fn distinct_signatures_fail_at_depth_zero() {
        let (tree, c) = four_distinct_signatures();
        let outcome = extract_binary_subtree(&tree, &c).unwrap();
        assert_eq!(
            outcome,
            ExtractionOutcome::Failure(ExtractionFailure {
                depth: 0,
                vertex: 0,
                reason: FailureReason::DistinctSignatures { extracted: 4 }
            })
        );
        assert_eq!(
            refute(&tree, &c).unwrap(),
            RefuteOutcome::NotRefuted(NotRefuted::ExtractionFailed(ExtractionFailure {
                depth: 0,
                vertex: 0,
                reason: FailureReason::DistinctSignatures { extracted: 4 }
            }))
        );
        let RefuteOutcome::NotRefuted(reason) = refute(&tree, &c).unwrap() else {
            panic!()
        };
        assert!(reason
            .to_string()
            .starts_with("extraction failed at depth 0"));
    }

    #[test]
    fn thin_vertices_fail() {
        let outcome = extract_binary_subtree(
            &RootedTree::path(3),
            &Coloring::binary(vec![0, 0, 0]).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            outcome,
            ExtractionOutcome::Failure(ExtractionFailure {
                depth: 0,
                reason: FailureReason::TooFewChildren { children: 1 },
                ..
            })
        ));
    }

    #[test]
    fn t1_exhaustive() {
        let t1 = build_tyler(&TylerSpec::classic(1).unwrap(), 100).unwrap();
        for bits in 0..16u8 {
            let c = Coloring::binary((0..4).map(|i| (bits >> i) & 1).collect()).unwrap();
            match extract_binary_subtree(&t1, &c).unwrap() {
                ExtractionOutcome::Success(e) => e.reverify(&t1, &c).unwrap(),
                ExtractionOutcome::Failure(f) => panic!("{f}"),
            }
        }
    }

    #[test]
    fn reflect_examples() {
        let r = reflect_word(&w("000110110")).unwrap();
        assert_eq!(
            r.palindrome,
            PalindromeWitness {
                offset: 2,
                length: 4
            }
        );
        assert_eq!(r.reflected, w("0110110"));
        assert_eq!(
            r.square,
            SquareWitness {
                offset: 0,
                period: 3
            }
        );
        assert_eq!(r.shape, ReflectionShape::FourSplit);

        let r = reflect_word(&w("011101000")).unwrap();
        assert_eq!(
            r.palindrome,
            PalindromeWitness {
                offset: 0,
                length: 5
            }
        );
        assert_eq!(r.reflected, w("011101110"));
        assert_eq!(
            r.square,
            SquareWitness {
                offset: 0,
                period: 4
            }
        );
        assert_eq!(r.shape, ReflectionShape::FiveRun);

        assert_eq!(
            reflect_word(&w("00010111")),
            Err(PigeonholeError::WordTooShort { len: 8 })
        );
    }

    #[test]
    fn shapes_match_their_patterns() {
        assert!(ReflectionShape::FourSplit.matches(&[1, 0, 0, 1, 0, 0, 1]));
        assert!(!ReflectionShape::FourSplit.matches(&[1, 1, 1, 1, 1, 1, 1]));
        assert!(ReflectionShape::FiveCentered.matches(&[0, 0, 1, 0, 0, 0, 1, 0, 0]));
    }

    #[test]
    fn t2_is_inconclusive() {
        let t2 = build_tyler(&TylerSpec::classic(2).unwrap(), 100).unwrap();
        let c = Coloring::binary(vec![0; 21]).unwrap();
        let RefuteOutcome::NotRefuted(reason) = refute(&t2, &c).unwrap() else {
            panic!()
        };
        assert_eq!(reason, NotRefuted::WordTooShort { len: 2 });
        assert_eq!(reason.to_string(), "generation word length 2 < 9");
    }

    #[test]
    fn non_binary_is_rejected() {
        let t = RootedTree::star(3);
        let c = Coloring::new(vec![0, 1, 2, 0], 3).unwrap();
        assert_eq!(
            extract_binary_subtree(&t, &c),
            Err(PigeonholeError::Coloring(ColoringError::NotBinary { k: 3 }))
        );
    }
}
