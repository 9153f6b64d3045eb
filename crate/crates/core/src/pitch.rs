//! Pitch classes, pitch-class sets, and triad extraction in 12-tone
//! equal temperament.
//!
//! A scale is modelled as a [`PitchClassSet`]: an ordered subset of the
//! twelve pitch classes, mirrored by a 12-bit mask. Triads of the four
//! classical qualities are located inside a scale by
//! [`extract_triads`], whose output order fixes the vertex numbering
//! used by every matrix downstream.

use std::fmt;

use thiserror::Error;

/// Fixed flat-preferring note spellings, indexed by pitch class.
const NOTE_NAMES: [&str; 12] = [
    "C", "Db", "D", "Eb", "E", "F", "Gb", "G", "Ab", "A", "Bb", "B",
];

const NOTE_NAMES_UNICODE: [&str; 12] = [
    "C",
    "D\u{266d}",
    "D",
    "E\u{266d}",
    "E",
    "F",
    "G\u{266d}",
    "G",
    "A\u{266d}",
    "A",
    "B\u{266d}",
    "B",
];

/// Rendering style for triad and pitch names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NameStyle {
    /// Portable labels: `Ab`, `ab`, `abo`, `Eb+`.
    Ascii,
    /// Labels using `♭` and `°`: `A♭`, `a♭`, `a♭°`, `E♭+`.
    Unicode,
}

/// Errors from parsing scale specifications.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScaleParseError {
    #[error("empty scale specification")]
    Empty,
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("pitch class {0} out of range 0..11")]
    OutOfRange(i64),
    #[error("duplicate pitch class {0}")]
    Duplicate(u8),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("malformed transpose suffix `{0}`")]
    BadTranspose(String),
}

// ============================================================================
// PitchClass
// ============================================================================

/// A pitch identified up to octave: an integer in `0..12`, with 0 = C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PitchClass(u8);

impl PitchClass {
    /// Wraps a value that is already in range.
    pub fn new(value: u8) -> Option<PitchClass> {
        (value < 12).then_some(PitchClass(value))
    }

    /// Reduces an arbitrary semitone count modulo 12.
    pub fn from_semitones(semitones: i32) -> PitchClass {
        PitchClass(semitones.rem_euclid(12) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn transpose(self, semitones: i32) -> PitchClass {
        PitchClass::from_semitones(self.0 as i32 + semitones)
    }

    /// Note name from the fixed flat-preferring table.
    pub fn name(self, style: NameStyle) -> &'static str {
        match style {
            NameStyle::Ascii => NOTE_NAMES[self.0 as usize],
            NameStyle::Unicode => NOTE_NAMES_UNICODE[self.0 as usize],
        }
    }
}

impl fmt::Display for PitchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

// ============================================================================
// PitchClassSet
// ============================================================================

/// A set of pitch classes: the harmonic palette a graph is built from.
///
/// Stored as a 12-bit mask; bit `i` is set iff pitch class `i` is a
/// member. Members always enumerate in ascending order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PitchClassSet(u16);

impl PitchClassSet {
    pub const CHROMATIC: PitchClassSet = PitchClassSet(0x0fff);

    /// Builds a set from a 12-bit mask. Fails if bits above 11 are set.
    pub fn from_mask(mask: u16) -> Option<PitchClassSet> {
        (mask < 1 << 12).then_some(PitchClassSet(mask))
    }

    pub fn from_pitches<I: IntoIterator<Item = PitchClass>>(pitches: I) -> PitchClassSet {
        let mut mask = 0u16;
        for p in pitches {
            mask |= 1 << p.value();
        }
        PitchClassSet(mask)
    }

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, p: PitchClass) -> bool {
        self.0 >> p.value() & 1 == 1
    }

    pub fn is_subset_of(self, other: PitchClassSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in ascending order.
    pub fn members(self) -> Vec<PitchClass> {
        (0..12)
            .filter(|i| self.0 >> i & 1 == 1)
            .map(PitchClass)
            .collect()
    }

    /// Adds `semitones` to every member, modulo 12.
    pub fn transpose(self, semitones: i32) -> PitchClassSet {
        let k = semitones.rem_euclid(12) as u32;
        if k == 0 {
            return self;
        }
        PitchClassSet((self.0 << k | self.0 >> (12 - k)) & 0x0fff)
    }

    /// 12-character binary rendering, pitch class 0 leftmost.
    pub fn mask_string(self) -> String {
        (0..12)
            .map(|i| if self.0 >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for PitchClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.members().iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

// ============================================================================
// Triads
// ============================================================================

/// The four classical triad qualities, in canonical rank order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriadQuality {
    Major,
    Minor,
    Diminished,
    Augmented,
}

impl TriadQuality {
    pub const ALL: [TriadQuality; 4] = [
        TriadQuality::Major,
        TriadQuality::Minor,
        TriadQuality::Diminished,
        TriadQuality::Augmented,
    ];

    /// Offsets of the third and fifth above the root, modulo 12.
    pub fn intervals(self) -> (u8, u8) {
        match self {
            TriadQuality::Major => (4, 7),
            TriadQuality::Minor => (3, 7),
            TriadQuality::Diminished => (3, 6),
            TriadQuality::Augmented => (4, 8),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TriadQuality::Major => "major",
            TriadQuality::Minor => "minor",
            TriadQuality::Diminished => "diminished",
            TriadQuality::Augmented => "augmented",
        }
    }
}

/// A three-note chord with a quality and a canonical root.
///
/// Triads are identified by their pitch-class set. The augmented
/// template maps three different roots onto the same set, so augmented
/// roots are canonicalised to the smallest member; the other qualities
/// determine the root uniquely.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Triad {
    root: PitchClass,
    quality: TriadQuality,
    pitches: PitchClassSet,
}

impl Triad {
    pub fn new(root: PitchClass, quality: TriadQuality) -> Triad {
        let (third, fifth) = quality.intervals();
        let pitches = PitchClassSet::from_pitches([
            root,
            root.transpose(third as i32),
            root.transpose(fifth as i32),
        ]);
        let root = if quality == TriadQuality::Augmented {
            pitches.members()[0]
        } else {
            root
        };
        Triad {
            root,
            quality,
            pitches,
        }
    }

    pub fn root(self) -> PitchClass {
        self.root
    }

    pub fn quality(self) -> TriadQuality {
        self.quality
    }

    pub fn pitches(self) -> PitchClassSet {
        self.pitches
    }

    pub fn transpose(self, semitones: i32) -> Triad {
        Triad::new(self.root.transpose(semitones), self.quality)
    }

    /// Display name: upper case for major (`Ab`), lower case for minor
    /// (`ab`), diminished marker `o`/`°` (`abo`), augmented `+` (`Ab+`).
    pub fn name(self, style: NameStyle) -> String {
        let note = self.root.name(style);
        match self.quality {
            TriadQuality::Major => note.to_string(),
            TriadQuality::Minor => note.to_lowercase(),
            TriadQuality::Diminished => {
                let marker = match style {
                    NameStyle::Ascii => "o",
                    NameStyle::Unicode => "\u{00b0}",
                };
                format!("{}{}", note.to_lowercase(), marker)
            }
            TriadQuality::Augmented => format!("{}+", note),
        }
    }
}

impl PartialOrd for Triad {
    fn partial_cmp(&self, other: &Triad) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Triad {
    fn cmp(&self, other: &Triad) -> std::cmp::Ordering {
        (self.quality, self.root).cmp(&(other.quality, other.root))
    }
}

impl fmt::Display for Triad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name(NameStyle::Ascii))
    }
}

/// All distinct triads contained in `scale`, in canonical order:
/// quality rank major < minor < diminished < augmented, then root
/// ascending. This order fixes vertex indices for every graph built
/// from the scale.
pub fn extract_triads(scale: PitchClassSet) -> Vec<Triad> {
    let mut out = Vec::new();
    for quality in TriadQuality::ALL {
        for root in 0..12u8 {
            let triad = Triad::new(PitchClass(root), quality);
            if triad.pitches().is_subset_of(scale) && triad.root().value() == root {
                // The root check collapses the three augmented spellings
                // of one pitch-class set onto the smallest root.
                out.push(triad);
            }
        }
    }
    out
}

// ============================================================================
// Presets and parsing
// ============================================================================

/// Preset scales, rooted on C. See the README table for values.
const PRESETS: [(&str, &[u8]); 11] = [
    ("major", &[0, 2, 4, 5, 7, 9, 11]),
    ("diatonic", &[0, 2, 4, 5, 7, 9, 11]),
    ("natural-minor", &[0, 2, 3, 5, 7, 8, 10]),
    ("harmonic-minor", &[0, 2, 3, 5, 7, 8, 11]),
    ("melodic-minor", &[0, 2, 3, 5, 7, 9, 11]),
    ("hexatonic", &[0, 1, 4, 5, 8, 9]),
    ("octatonic", &[0, 1, 3, 4, 6, 7, 9, 10]),
    ("whole-tone", &[0, 2, 4, 6, 8, 10]),
    ("chromatic", &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]),
    ("mixolydian-augmented", &[0, 2, 4, 5, 8, 9, 10]),
    ("enigmatic-minor", &[0, 1, 4, 6, 8, 10, 11]),
];

/// Names accepted by [`preset_scale`], in table order.
pub fn preset_names() -> Vec<&'static str> {
    PRESETS.iter().map(|(n, _)| *n).collect()
}

/// Looks up a preset scale by name (case-insensitive), rooted on C.
pub fn preset_scale(name: &str) -> Result<PitchClassSet, ScaleParseError> {
    let lookup = name.trim().to_lowercase();
    PRESETS
        .iter()
        .find(|(n, _)| *n == lookup)
        .map(|(_, values)| PitchClassSet::from_pitches(values.iter().map(|&v| PitchClass(v))))
        .ok_or_else(|| ScaleParseError::UnknownPreset(name.trim().to_string()))
}

/// Parses a scale specification.
///
/// Accepted forms:
/// - a comma- or space-separated list of integers in `0..11`, e.g.
///   `"0,2,4,5,7,9,11"` (duplicates are rejected, not deduplicated);
/// - a 12-character binary mask, leftmost character = pitch class 0,
///   e.g. `"101011010101"`;
/// - a preset name with an optional `@k` transpose suffix, e.g.
///   `"harmonic-minor"` or `"major@3"`.
///
/// Empty results are rejected here; an empty palette is only legal when
/// constructed directly.
pub fn parse_scale(text: &str) -> Result<PitchClassSet, ScaleParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(ScaleParseError::Empty);
    }

    if trimmed.len() == 12 && trimmed.bytes().all(|b| b == b'0' || b == b'1') {
        let mut mask = 0u16;
        for (i, b) in trimmed.bytes().enumerate() {
            if b == b'1' {
                mask |= 1 << i;
            }
        }
        let set = PitchClassSet(mask);
        if set.is_empty() {
            return Err(ScaleParseError::Empty);
        }
        return Ok(set);
    }

    if trimmed.starts_with(|c: char| c.is_ascii_digit()) {
        let mut mask = 0u16;
        for token in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
            if token.is_empty() {
                continue;
            }
            let value: i64 = token
                .parse()
                .map_err(|_| ScaleParseError::MalformedToken(token.to_string()))?;
            if !(0..12).contains(&value) {
                return Err(ScaleParseError::OutOfRange(value));
            }
            if mask >> value & 1 == 1 {
                return Err(ScaleParseError::Duplicate(value as u8));
            }
            mask |= 1 << value;
        }
        return Ok(PitchClassSet(mask));
    }

    let (name, transpose) = match trimmed.split_once('@') {
        Some((name, k)) => {
            let k: i32 = k
                .parse()
                .map_err(|_| ScaleParseError::BadTranspose(k.to_string()))?;
            (name, k)
        }
        None => (trimmed, 0),
    };
    Ok(preset_scale(name)?.transpose(transpose))
}
