//! Gate instructions and circuits.
//!
//! A circuit body is a flat, ordered instruction list; that list is the
//! search position of a particle and the gene string of a chromosome. The
//! mandatory Hadamard layer on all qubits is *not* stored in the body: the
//! simulator applies it implicitly and the QASM emitter re-materializes it,
//! so list surgery during search can never destroy the initialization layer.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::ConfigError;
use crate::fitness::FitnessKind;

/// Hard representational limit; indices are bit positions in a usize.
pub const MAX_QUBITS: usize = 30;
/// Largest register a search configuration may ask for. Dense simulation is
/// O(2^n) per gate, so swarm-sized workloads stop being interactive long
/// before this.
pub const MAX_PROBLEM_QUBITS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GateKind {
    H,
    X,
    Y,
    Z,
    Cx,
    Rx,
    Ry,
    Rz,
}

impl GateKind {
    pub const ALL: [GateKind; 8] = [
        GateKind::H,
        GateKind::X,
        GateKind::Y,
        GateKind::Z,
        GateKind::Cx,
        GateKind::Rx,
        GateKind::Ry,
        GateKind::Rz,
    ];

    /// True for the rotation kinds, which carry an angle.
    pub fn is_parameterized(self) -> bool {
        matches!(self, GateKind::Rx | GateKind::Ry | GateKind::Rz)
    }

    /// CX is the only two-qubit kind.
    pub fn is_two_qubit(self) -> bool {
        matches!(self, GateKind::Cx)
    }

    /// Can this kind move probability mass off a computational basis state?
    /// Needed in every gate set so the all-ones target stays reachable.
    pub fn can_flip_bits(self) -> bool {
        matches!(self, GateKind::X | GateKind::Y | GateKind::Rx | GateKind::Ry)
    }

    /// Lowercase QASM mnemonic.
    pub fn name(self) -> &'static str {
        match self {
            GateKind::H => "h",
            GateKind::X => "x",
            GateKind::Y => "y",
            GateKind::Z => "z",
            GateKind::Cx => "cx",
            GateKind::Rx => "rx",
            GateKind::Ry => "ry",
            GateKind::Rz => "rz",
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GateKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "h" => Ok(GateKind::H),
            "x" => Ok(GateKind::X),
            "y" => Ok(GateKind::Y),
            "z" => Ok(GateKind::Z),
            "cx" => Ok(GateKind::Cx),
            "rx" => Ok(GateKind::Rx),
            "ry" => Ok(GateKind::Ry),
            "rz" => Ok(GateKind::Rz),
            other => Err(format!("unknown gate kind `{other}`")),
        }
    }
}

/// Non-empty, deduplicated set of gate kinds a run may draw from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateSet(Vec<GateKind>);

impl GateSet {
    pub fn new(kinds: impl IntoIterator<Item = GateKind>) -> Result<Self, ConfigError> {
        let mut v: Vec<GateKind> = kinds.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(ConfigError::EmptyGateSet);
        }
        Ok(GateSet(v))
    }

    /// The default set: {h, x, y, z, cx, rx, ry, rz}.
    pub fn all() -> Self {
        GateSet(GateKind::ALL.to_vec())
    }

    pub fn kinds(&self) -> &[GateKind] {
        &self.0
    }

    pub fn contains(&self, kind: GateKind) -> bool {
        self.0.contains(&kind)
    }

    pub fn has_flip_gate(&self) -> bool {
        self.0.iter().any(|k| k.can_flip_bits())
    }
}

impl Default for GateSet {
    fn default() -> Self {
        GateSet::all()
    }
}

impl fmt::Display for GateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(|k| k.name()).collect();
        f.write_str(&names.join(","))
    }
}

impl FromStr for GateSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let kinds = s
            .split(',')
            .filter(|part| !part.trim().is_empty())
            .map(GateKind::from_str)
            .collect::<Result<Vec<_>, _>>()?;
        GateSet::new(kinds).map_err(|e| e.to_string())
    }
}

/// One gate application: kind, target qubit(s), and an angle for rotations.
///
/// For `cx` the first qubit is the control and the second the target; all
/// other kinds use a single qubit. Angles live in `[0, 2*pi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Instruction {
    kind: GateKind,
    first: usize,
    second: Option<usize>,
    angle: Option<f64>,
}

impl Instruction {
    /// Checked constructor used by the parser and generic callers.
    pub fn new(kind: GateKind, targets: &[usize], angle: Option<f64>) -> Result<Self, ConfigError> {
        let bad = |reason: String| ConfigError::BadInstruction { index: 0, reason };
        let (first, second) = if kind.is_two_qubit() {
            match targets {
                [c, t] if c != t => (*c, Some(*t)),
                [c, t] => {
                    return Err(bad(format!("cx control and target must differ, both {c} ({t})")))
                }
                _ => return Err(bad(format!("{kind} takes 2 qubits, got {}", targets.len()))),
            }
        } else {
            match targets {
                [q] => (*q, None),
                _ => return Err(bad(format!("{kind} takes 1 qubit, got {}", targets.len()))),
            }
        };
        let angle = match (kind.is_parameterized(), angle) {
            (true, Some(a)) if (0.0..TAU).contains(&a) => Some(a),
            (true, Some(a)) => return Err(bad(format!("angle {a} outside [0, 2*pi)"))),
            (true, None) => return Err(bad(format!("{kind} requires an angle"))),
            (false, None) => None,
            (false, Some(_)) => return Err(bad(format!("{kind} takes no angle"))),
        };
        Ok(Instruction {
            kind,
            first,
            second,
            angle,
        })
    }

    pub fn h(qubit: usize) -> Self {
        Self::plain(GateKind::H, qubit)
    }

    pub fn x(qubit: usize) -> Self {
        Self::plain(GateKind::X, qubit)
    }

    pub fn y(qubit: usize) -> Self {
        Self::plain(GateKind::Y, qubit)
    }

    pub fn z(qubit: usize) -> Self {
        Self::plain(GateKind::Z, qubit)
    }

    pub fn cx(control: usize, target: usize) -> Self {
        assert_ne!(control, target, "cx control and target must differ");
        Instruction {
            kind: GateKind::Cx,
            first: control,
            second: Some(target),
            angle: None,
        }
    }

    pub fn rx(angle: f64, qubit: usize) -> Self {
        Self::rotation(GateKind::Rx, angle, qubit)
    }

    pub fn ry(angle: f64, qubit: usize) -> Self {
        Self::rotation(GateKind::Ry, angle, qubit)
    }

    pub fn rz(angle: f64, qubit: usize) -> Self {
        Self::rotation(GateKind::Rz, angle, qubit)
    }

    fn plain(kind: GateKind, qubit: usize) -> Self {
        Instruction {
            kind,
            first: qubit,
            second: None,
            angle: None,
        }
    }

    fn rotation(kind: GateKind, angle: f64, qubit: usize) -> Self {
        assert!(
            (0.0..TAU).contains(&angle),
            "rotation angle {angle} outside [0, 2*pi)"
        );
        Instruction {
            kind,
            first: qubit,
            second: None,
            angle: Some(angle),
        }
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    /// `(first, second)` qubits; `second` is set only for `cx`, where
    /// `first` is the control.
    pub fn qubits(&self) -> (usize, Option<usize>) {
        (self.first, self.second)
    }

    pub fn angle(&self) -> Option<f64> {
        self.angle
    }

    pub fn is_valid_for(&self, num_qubits: usize) -> bool {
        self.first < num_qubits && self.second.map_or(true, |t| t < num_qubits)
    }
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.second, self.angle) {
            (Some(t), _) => write!(f, "{} q[{}],q[{}];", self.kind, self.first, t),
            (None, Some(a)) => write!(f, "{}({}) q[{}];", self.kind, crate::text::sig17(a), self.first),
            (None, None) => write!(f, "{} q[{}];", self.kind, self.first),
        }
    }
}

/// A register size plus an ordered instruction body.
///
/// Qubit `q[0]` is the least-significant bit of the basis-state index.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    num_qubits: usize,
    body: Vec<Instruction>,
}

impl Circuit {
    pub fn new(num_qubits: usize, body: Vec<Instruction>) -> Result<Self, ConfigError> {
        if num_qubits == 0 || num_qubits > MAX_QUBITS {
            return Err(ConfigError::BadQubitCount {
                got: num_qubits,
                max: MAX_QUBITS,
            });
        }
        for (index, instruction) in body.iter().enumerate() {
            if !instruction.is_valid_for(num_qubits) {
                return Err(ConfigError::BadInstruction {
                    index,
                    reason: format!("targets exceed {num_qubits}-qubit register"),
                });
            }
        }
        Ok(Circuit { num_qubits, body })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn body(&self) -> &[Instruction] {
        &self.body
    }

    pub fn num_states(&self) -> usize {
        1 << self.num_qubits
    }
}

/// Draw one uniformly random instruction.
///
/// The kind is uniform over the kinds of `gate_set` applicable to
/// `num_qubits` (for a single-qubit register, `cx` is excluded from the
/// draw); targets are uniform over valid assignments, with distinct
/// control/target for `cx`; rotation angles are uniform over `[0, 2*pi)`.
pub fn random_instruction(
    num_qubits: usize,
    gate_set: &GateSet,
    rng: &mut impl Rng,
) -> Result<Instruction, ConfigError> {
    if num_qubits == 0 || num_qubits > MAX_QUBITS {
        return Err(ConfigError::BadQubitCount {
            got: num_qubits,
            max: MAX_QUBITS,
        });
    }
    let applicable: Vec<GateKind> = gate_set
        .kinds()
        .iter()
        .copied()
        .filter(|k| num_qubits >= 2 || !k.is_two_qubit())
        .collect();
    if applicable.is_empty() {
        return Err(ConfigError::NoApplicableGate { num_qubits });
    }
    let kind = applicable[rng.gen_range(0..applicable.len())];
    let instruction = if kind.is_two_qubit() {
        let control = rng.gen_range(0..num_qubits);
        let mut target = rng.gen_range(0..num_qubits - 1);
        if target >= control {
            target += 1;
        }
        Instruction::cx(control, target)
    } else {
        let qubit = rng.gen_range(0..num_qubits);
        if kind.is_parameterized() {
            let angle = rng.gen_range(0.0..TAU);
            Instruction::rotation(kind, angle, qubit)
        } else {
            Instruction::plain(kind, qubit)
        }
    };
    Ok(instruction)
}

/// Settings shared by every engine: the register, the gate vocabulary,
/// program-size management, and which fitness scores a distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemConfig {
    pub num_qubits: usize,
    pub gate_set: GateSet,
    /// Positions/chromosomes never grow beyond this many instructions.
    pub max_body_len: usize,
    /// Inclusive bounds on the length of freshly randomized bodies.
    pub init_len_range: (usize, usize),
    pub fitness_kind: FitnessKind,
}

impl Default for ProblemConfig {
    fn default() -> Self {
        ProblemConfig {
            num_qubits: 5,
            gate_set: GateSet::all(),
            max_body_len: 64,
            init_len_range: (5, 20),
            fitness_kind: FitnessKind::Fe2,
        }
    }
}

impl ProblemConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.num_qubits == 0 || self.num_qubits > MAX_PROBLEM_QUBITS {
            return Err(ConfigError::BadQubitCount {
                got: self.num_qubits,
                max: MAX_PROBLEM_QUBITS,
            });
        }
        if !self.gate_set.has_flip_gate() {
            return Err(ConfigError::NoFlipGate);
        }
        if self.num_qubits == 1 && self.gate_set.kinds() == [GateKind::Cx] {
            // Unreachable while the flip-gate rule holds; kept so the error
            // stays precise if that rule is ever relaxed.
            return Err(ConfigError::NoApplicableGate { num_qubits: 1 });
        }
        if self.max_body_len == 0 {
            return Err(ConfigError::NotPositive {
                what: "max_body_len",
            });
        }
        let (lo, hi) = self.init_len_range;
        if lo == 0 || lo > hi || hi > self.max_body_len {
            return Err(ConfigError::BadInitLenRange {
                lo,
                hi,
                max: self.max_body_len,
            });
        }
        Ok(())
    }

    pub(crate) fn metadata(&self, into: &mut Vec<(String, String)>) {
        into.push(("num_qubits".into(), self.num_qubits.to_string()));
        into.push(("gate_set".into(), self.gate_set.to_string()));
        into.push(("max_body_len".into(), self.max_body_len.to_string()));
        into.push(("init_len_min".into(), self.init_len_range.0.to_string()));
        into.push(("init_len_max".into(), self.init_len_range.1.to_string()));
        into.push(("fitness".into(), self.fitness_kind.to_string()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::substream;

    #[test]
    fn single_qubit_single_kind_has_one_outcome() {
        let set = GateSet::new([GateKind::X]).unwrap();
        let mut rng = substream(0, 0, 0);
        for _ in 0..20 {
            let ins = random_instruction(1, &set, &mut rng).unwrap();
            assert_eq!(ins, Instruction::x(0));
        }
    }

    #[test]
    fn kinds_are_uniform_over_the_full_set() {
        let set = GateSet::all();
        let mut rng = substream(11, 0, 0);
        let mut counts = [0usize; 8];
        let draws = 10_000;
        for _ in 0..draws {
            let ins = random_instruction(5, &set, &mut rng).unwrap();
            let slot = GateKind::ALL.iter().position(|&k| k == ins.kind()).unwrap();
            counts[slot] += 1;
            assert!(ins.is_valid_for(5));
            if let (c, Some(t)) = ins.qubits() {
                assert_ne!(c, t);
            }
            assert_eq!(ins.angle().is_some(), ins.kind().is_parameterized());
            if let Some(a) = ins.angle() {
                assert!((0.0..TAU).contains(&a));
            }
        }
        for (slot, &count) in counts.iter().enumerate() {
            let freq = count as f64 / draws as f64;
            assert!(
                (freq - 0.125).abs() <= 0.02,
                "kind {:?} frequency {freq}",
                GateKind::ALL[slot]
            );
        }
    }

    #[test]
    fn cx_only_on_one_qubit_is_a_config_error() {
        let set = GateSet::new([GateKind::Cx]).unwrap();
        let mut rng = substream(0, 0, 0);
        assert_eq!(
            random_instruction(1, &set, &mut rng),
            Err(ConfigError::NoApplicableGate { num_qubits: 1 })
        );
    }

    #[test]
    fn empty_gate_set_is_rejected_at_construction() {
        assert_eq!(GateSet::new([]), Err(ConfigError::EmptyGateSet));
    }

    #[test]
    fn seeded_draws_replay_exactly() {
        let set = GateSet::all();
        let a: Vec<Instruction> = {
            let mut rng = substream(42, 0, 7);
            (0..64)
                .map(|_| random_instruction(5, &set, &mut rng).unwrap())
                .collect()
        };
        let b: Vec<Instruction> = {
            let mut rng = substream(42, 0, 7);
            (0..64)
                .map(|_| random_instruction(5, &set, &mut rng).unwrap())
                .collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn cx_targets_cover_all_distinct_pairs() {
        let set = GateSet::new([GateKind::Cx]).unwrap();
        let mut rng = substream(3, 0, 0);
        let mut seen = std::collections::HashSet::new();
        for _ in 0..2_000 {
            let ins = random_instruction(3, &set, &mut rng).unwrap();
            let (c, t) = (ins.qubits().0, ins.qubits().1.unwrap());
            assert_ne!(c, t);
            seen.insert((c, t));
        }
        assert_eq!(seen.len(), 6, "all ordered pairs over 3 qubits");
    }

    #[test]
    fn instruction_constructor_enforces_shape() {
        assert!(Instruction::new(GateKind::Cx, &[1, 1], None).is_err());
        assert!(Instruction::new(GateKind::Cx, &[0], None).is_err());
        assert!(Instruction::new(GateKind::H, &[0], Some(1.0)).is_err());
        assert!(Instruction::new(GateKind::Rx, &[0], None).is_err());
        assert!(Instruction::new(GateKind::Rx, &[0], Some(TAU)).is_err());
        assert!(Instruction::new(GateKind::Rx, &[0], Some(0.0)).is_ok());
    }

    #[test]
    fn circuit_rejects_out_of_range_targets() {
        let err = Circuit::new(2, vec![Instruction::h(0), Instruction::x(2)]).unwrap_err();
        assert!(matches!(err, ConfigError::BadInstruction { index: 1, .. }));
    }

    #[test]
    fn gate_set_parses_from_comma_list() {
        let set: GateSet = "h, x,cx".parse().unwrap();
        assert_eq!(set.kinds(), [GateKind::H, GateKind::X, GateKind::Cx]);
        assert!("h,q".parse::<GateSet>().is_err());
    }

    #[test]
    fn problem_config_requires_a_flip_gate() {
        let cfg = ProblemConfig {
            gate_set: GateSet::new([GateKind::H, GateKind::Z, GateKind::Rz]).unwrap(),
            ..ProblemConfig::default()
        };
        assert_eq!(cfg.validate(), Err(ConfigError::NoFlipGate));
        assert!(ProblemConfig::default().validate().is_ok());
    }
}
