//! Per-call switches for the matvec dispatcher and the traversal driver.

/// Which kernel family a call should use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Pick from the vector's current format after the convert rule.
    Auto,
    /// Force column-based (sparse frontier) kernels.
    Push,
    /// Force row-based (dense frontier) kernels.
    Pull,
}

/// The five optimizations, each independently switchable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Toggles {
    pub masking: bool,
    pub early_exit: bool,
    pub operand_reuse: bool,
    pub structure_only: bool,
    pub change_of_direction: bool,
}

impl Toggles {
    pub fn all_on() -> Self {
        Toggles {
            masking: true,
            early_exit: true,
            operand_reuse: true,
            structure_only: true,
            change_of_direction: true,
        }
    }

    pub fn all_off() -> Self {
        Toggles {
            masking: false,
            early_exit: false,
            operand_reuse: false,
            structure_only: false,
            change_of_direction: false,
        }
    }

    /// Enumerate all 32 combinations.
    pub fn all_combinations() -> Vec<Toggles> {
        (0..32u8)
            .map(|bits| Toggles {
                masking: bits & 1 != 0,
                early_exit: bits & 2 != 0,
                operand_reuse: bits & 4 != 0,
                structure_only: bits & 8 != 0,
                change_of_direction: bits & 16 != 0,
            })
            .collect()
    }
}

impl Default for Toggles {
    fn default() -> Self {
        Toggles::all_on()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Descriptor {
    /// Structural complement: invert the mask's pass/block rule.
    pub scmp: bool,
    /// Combine kernel results with the previous output instead of replacing.
    pub accum: bool,
    /// Sparse/dense format-switch threshold, in (0, 1].
    pub switchpoint: f64,
    pub direction: Direction,
    pub toggles: Toggles,
}

impl Default for Descriptor {
    fn default() -> Self {
        Descriptor {
            scmp: false,
            accum: false,
            switchpoint: 0.01,
            direction: Direction::Auto,
            toggles: Toggles::all_on(),
        }
    }
}
