//! Random access into the bi-infinite word in O(log |i|) time.
//!
//! The word at level n splits into thirds: the left third is sigma applied to
//! level n-1, the middle is level n-1 itself, and the right third is rho
//! applied to it. The leading balanced-ternary digit of a centered index
//! selects the third, and the remaining digits locate the symbol within it,
//! so reading the digits most-significant-first and composing sigma for -1,
//! nothing for 0, and rho for +1 accumulates exactly the letter permutation
//! that the nesting applies to the center symbol 2. The permutations reachable
//! this way form the whole 6-element symmetric group on {1, 2, 3}, giving a
//! finite automaton over the digit alphabet.
//!
//! The construction is validated, not assumed: the test suite compares it
//! exhaustively against direct generation.

use crate::balanced::{BalancedTernaryDigits, Digit};
use crate::word::{Permutation3, Symbol, IDENTITY, RHO, SIGMA};

fn digit_permutation(d: Digit) -> Permutation3 {
    match d {
        Digit::Minus => SIGMA,
        Digit::Zero => IDENTITY,
        Digit::Plus => RHO,
    }
}

/// The symbol of the bi-infinite word at integer index `i` (index 0 is the
/// center symbol 2).
pub fn symbol_at_infinite(i: i64) -> Symbol {
    symbol_for_digits(BalancedTernaryDigits::from_integer(i).digits())
}

/// Reads an MSB-first digit sequence, composing each digit's permutation onto
/// the accumulator from inside (earlier digits stay outermost), then applies
/// the result to the center symbol 2. Leading zeros are inert.
pub fn symbol_for_digits(digits: &[Digit]) -> Symbol {
    let mut acc = IDENTITY;
    for &d in digits {
        acc = acc.compose(&digit_permutation(d));
    }
    acc.apply(Symbol::Two)
}

/// The digit-reading automaton: states are the letter permutations reachable
/// from the identity, transitions compose a digit's permutation, and a
/// state's output is its permutation applied to 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AutomatonTable {
    states: Vec<Permutation3>,
    /// `transitions[s]` holds the successor of state `s` on digits -1, 0, +1.
    transitions: Vec<[usize; 3]>,
    outputs: Vec<Symbol>,
}

/// Digits in transition-table column order.
pub const DIGIT_ORDER: [Digit; 3] = [Digit::Minus, Digit::Zero, Digit::Plus];

impl AutomatonTable {
    /// Breadth-first closure of the identity state under the three digit
    /// transitions; state 0 is the identity and the start state.
    pub fn build() -> AutomatonTable {
        let mut states = vec![IDENTITY];
        let mut transitions: Vec<[usize; 3]> = Vec::new();
        let mut frontier = 0;
        while frontier < states.len() {
            let state = states[frontier];
            let mut row = [0usize; 3];
            for (col, d) in DIGIT_ORDER.into_iter().enumerate() {
                let next = state.compose(&digit_permutation(d));
                let id = match states.iter().position(|&p| p == next) {
                    Some(id) => id,
                    None => {
                        states.push(next);
                        states.len() - 1
                    }
                };
                row[col] = id;
            }
            transitions.push(row);
            frontier += 1;
        }
        let outputs = states.iter().map(|p| p.apply(Symbol::Two)).collect();
        AutomatonTable { states, transitions, outputs }
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[Permutation3] {
        &self.states
    }

    pub fn start_state(&self) -> usize {
        0
    }

    pub fn transition(&self, state: usize, d: Digit) -> usize {
        let col = DIGIT_ORDER.iter().position(|&x| x == d).unwrap();
        self.transitions[state][col]
    }

    pub fn output(&self, state: usize) -> Symbol {
        self.outputs[state]
    }

    /// Runs the automaton over an MSB-first digit sequence.
    pub fn run(&self, digits: &[Digit]) -> Symbol {
        let mut state = self.start_state();
        for &d in digits {
            state = self.transition(state, d);
        }
        self.output(state)
    }
}

/// Builds the transition table (at most 6 states).
pub fn automaton_table() -> AutomatonTable {
    AutomatonTable::build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{generate, half_width, CenteredIndex, symbol_at};

    #[test]
    fn center_and_first_ring() {
        assert_eq!(symbol_at_infinite(0), Symbol::Two);
        assert_eq!(symbol_at_infinite(1), Symbol::Three);
        assert_eq!(symbol_at_infinite(-1), Symbol::One);
        assert_eq!(symbol_at_infinite(-13), Symbol::One);
    }

    #[test]
    fn worked_check_index_four() {
        // 4 has digits [+1, +1]; rho(rho(2)) = 2, and index 4 is the last
        // symbol of the level-2 word 213123132.
        let digits = BalancedTernaryDigits::from_integer(4);
        assert_eq!(digits.digits(), &[Digit::Plus, Digit::Plus][..]);
        assert_eq!(symbol_for_digits(digits.digits()), Symbol::Two);
        assert_eq!(
            symbol_at(CenteredIndex::new(2, 4).unwrap()).unwrap(),
            Symbol::Two
        );
    }

    #[test]
    fn all_six_permutations_are_reachable() {
        let table = automaton_table();
        assert_eq!(table.state_count(), 6);
        assert!(table.states()[0].is_identity());
        // Identity on digit 0 stays put; digit +1 leads to the rho state
        // whose output is rho(2) = 3.
        assert_eq!(table.transition(0, Digit::Zero), 0);
        let rho_state = table.transition(0, Digit::Plus);
        assert_eq!(table.output(rho_state), Symbol::Three);
    }

    #[test]
    fn table_and_direct_fold_agree() {
        let table = automaton_table();
        for i in -400..=400 {
            let digits = BalancedTernaryDigits::from_integer(i);
            assert_eq!(table.run(digits.digits()), symbol_for_digits(digits.digits()));
        }
    }

    #[test]
    fn leading_zeros_do_not_change_the_symbol() {
        for i in [-40, -1, 0, 1, 7, 100] {
            let mut digits = BalancedTernaryDigits::from_integer(i).digits().to_vec();
            let plain = symbol_for_digits(&digits);
            digits.insert(0, Digit::Zero);
            digits.insert(0, Digit::Zero);
            assert_eq!(symbol_for_digits(&digits), plain);
        }
    }

    #[test]
    fn matches_generation_up_to_level_five() {
        let level = 5;
        let word = generate(level).unwrap();
        let half = half_width(level);
        for i in -half..=half {
            let offset = (i + half) as usize;
            assert_eq!(
                symbol_at_infinite(i),
                word.symbol(offset),
                "index {i}"
            );
        }
    }
}
