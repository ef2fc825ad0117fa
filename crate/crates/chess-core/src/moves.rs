use std::fmt;

use crate::piece::PieceKind;
use crate::square::Square;

/// Properties of a move needed to apply it and to classify it in scans.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct MoveFlags {
    pub capture: bool,
    pub en_passant: bool,
    pub castle_kingside: bool,
    pub castle_queenside: bool,
    pub double_pawn_push: bool,
}

/// A move between two squares. For castling, `to` is the king's destination
/// square (g- or c-file). Promotions carry the chosen piece kind; a single
/// pawn advance to the last rank therefore yields four distinct moves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChessMove {
    pub from: Square,
    pub to: Square,
    pub promotion: Option<PieceKind>,
    pub flags: MoveFlags,
}

impl ChessMove {
    /// The square the move lands on. This is `to` for every move kind,
    /// including promotions, en passant and castling.
    pub fn destination(&self) -> Square {
        self.to
    }

    /// Sort key giving the deterministic move order: (from, to, promotion).
    pub(crate) fn order_key(&self) -> (u8, u8, u8) {
        (
            self.from.index() as u8,
            self.to.index() as u8,
            match self.promotion {
                None => 0,
                Some(kind) => kind as u8 + 1,
            },
        )
    }
}

impl fmt::Display for ChessMove {
    /// Long algebraic form, e.g. `e2e4`, `e7e8q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.from, self.to)?;
        if let Some(kind) = self.promotion {
            write!(f, "{}", kind.letter().to_ascii_lowercase())?;
        }
        Ok(())
    }
}
