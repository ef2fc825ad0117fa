use std::fmt;
use std::str::FromStr;

/// Color of a board square. a1 is dark; a square at (file, rank) is light
/// iff file + rank is odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SquareColor {
    Light,
    Dark,
}

impl SquareColor {
    pub fn opposite(self) -> SquareColor {
        match self {
            SquareColor::Light => SquareColor::Dark,
            SquareColor::Dark => SquareColor::Light,
        }
    }
}

impl fmt::Display for SquareColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SquareColor::Light => write!(f, "light"),
            SquareColor::Dark => write!(f, "dark"),
        }
    }
}

/// A board square, indexed 0..64 with a1 = 0, b1 = 1, ..., h8 = 63.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square(u8);

impl Square {
    /// Builds a square from 1-based file (a = 1) and rank coordinates.
    ///
    /// Returns `None` when either coordinate is outside 1..=8.
    pub fn new(file: u8, rank: u8) -> Option<Square> {
        if (1..=8).contains(&file) && (1..=8).contains(&rank) {
            Some(Square((rank - 1) * 8 + (file - 1)))
        } else {
            None
        }
    }

    pub fn from_index(index: u8) -> Option<Square> {
        if index < 64 {
            Some(Square(index))
        } else {
            None
        }
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// 1-based file, a = 1 .. h = 8.
    pub fn file(self) -> u8 {
        self.0 % 8 + 1
    }

    /// 1-based rank.
    pub fn rank(self) -> u8 {
        self.0 / 8 + 1
    }

    pub fn color(self) -> SquareColor {
        if (self.file() + self.rank()) % 2 == 1 {
            SquareColor::Light
        } else {
            SquareColor::Dark
        }
    }

    pub fn is_light(self) -> bool {
        self.color() == SquareColor::Light
    }

    /// Square shifted by (file, rank) deltas, if still on the board.
    pub fn offset(self, dfile: i8, drank: i8) -> Option<Square> {
        let file = self.file() as i8 + dfile;
        let rank = self.rank() as i8 + drank;
        if (1..=8).contains(&file) && (1..=8).contains(&rank) {
            Square::new(file as u8, rank as u8)
        } else {
            None
        }
    }

    pub fn all() -> impl Iterator<Item = Square> {
        (0..64).map(Square)
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}",
            (b'a' + self.file() - 1) as char,
            self.rank()
        )
    }
}

impl fmt::Debug for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Square {
    type Err = ();

    fn from_str(s: &str) -> Result<Square, ()> {
        let bytes = s.as_bytes();
        if bytes.len() != 2 {
            return Err(());
        }
        let file = bytes[0].wrapping_sub(b'a') + 1;
        let rank = bytes[1].wrapping_sub(b'0');
        Square::new(file, rank).ok_or(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_is_dark_h1_is_light() {
        assert_eq!(Square::new(1, 1).unwrap().color(), SquareColor::Dark);
        assert_eq!(Square::new(8, 1).unwrap().color(), SquareColor::Light);
        // e6 and d3 are light, c5 is dark
        assert!("e6".parse::<Square>().unwrap().is_light());
        assert!("d3".parse::<Square>().unwrap().is_light());
        assert!(!"c5".parse::<Square>().unwrap().is_light());
    }

    #[test]
    fn exactly_32_light_squares() {
        assert_eq!(Square::all().filter(|s| s.is_light()).count(), 32);
    }

    #[test]
    fn round_trips_names() {
        for sq in Square::all() {
            assert_eq!(sq.to_string().parse::<Square>().unwrap(), sq);
        }
    }
}
