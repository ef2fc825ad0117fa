use crate::piece::{Piece, PieceKind, Side};
use crate::square::{Square, SquareColor};

/// Piece placement: a plain 64-slot mailbox.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct Board {
    squares: [Option<Piece>; 64],
}

impl Board {
    pub(crate) fn empty() -> Board {
        Board {
            squares: [None; 64],
        }
    }

    pub(crate) fn piece_at(&self, sq: Square) -> Option<Piece> {
        self.squares[sq.index()]
    }

    pub(crate) fn set(&mut self, sq: Square, piece: Option<Piece>) {
        self.squares[sq.index()] = piece;
    }

    pub(crate) fn king_square(&self, side: Side) -> Option<Square> {
        Square::all().find(|&sq| {
            self.piece_at(sq)
                == Some(Piece {
                    kind: PieceKind::King,
                    side,
                })
        })
    }

    pub(crate) fn occupied_by(&self, side: Side) -> impl Iterator<Item = (Square, Piece)> + '_ {
        Square::all().filter_map(move |sq| match self.piece_at(sq) {
            Some(p) if p.side == side => Some((sq, p)),
            _ => None,
        })
    }

    pub(crate) fn count(&self, side: Side, kind: PieceKind) -> u8 {
        self.squares
            .iter()
            .flatten()
            .filter(|p| p.side == side && p.kind == kind)
            .count() as u8
    }
}

/// Per-side piece counts plus the square colors of the bishops.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SideCensus {
    pub pawns: u8,
    pub knights: u8,
    pub bishops: u8,
    pub rooks: u8,
    pub queens: u8,
    pub kings: u8,
    pub light_bishops: u8,
    pub dark_bishops: u8,
}

impl SideCensus {
    pub fn count(&self, kind: PieceKind) -> u8 {
        match kind {
            PieceKind::Pawn => self.pawns,
            PieceKind::Knight => self.knights,
            PieceKind::Bishop => self.bishops,
            PieceKind::Rook => self.rooks,
            PieceKind::Queen => self.queens,
            PieceKind::King => self.kings,
        }
    }
}

/// Exact material description of a position.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MaterialCensus {
    pub white: SideCensus,
    pub black: SideCensus,
}

impl MaterialCensus {
    pub(crate) fn from_board(board: &Board) -> MaterialCensus {
        let mut census = MaterialCensus::default();
        for sq in Square::all() {
            let Some(piece) = board.piece_at(sq) else {
                continue;
            };
            let side = match piece.side {
                Side::White => &mut census.white,
                Side::Black => &mut census.black,
            };
            match piece.kind {
                PieceKind::Pawn => side.pawns += 1,
                PieceKind::Knight => side.knights += 1,
                PieceKind::Bishop => {
                    side.bishops += 1;
                    match sq.color() {
                        SquareColor::Light => side.light_bishops += 1,
                        SquareColor::Dark => side.dark_bishops += 1,
                    }
                }
                PieceKind::Rook => side.rooks += 1,
                PieceKind::Queen => side.queens += 1,
                PieceKind::King => side.kings += 1,
            }
        }
        census
    }

    pub fn side(&self, side: Side) -> &SideCensus {
        match side {
            Side::White => &self.white,
            Side::Black => &self.black,
        }
    }

    /// True when each side has exactly one bishop and the two bishops stand
    /// on different-colored squares.
    pub fn opposite_colored_bishops(&self) -> bool {
        self.white.bishops == 1
            && self.black.bishops == 1
            && self.white.light_bishops != self.black.light_bishops
    }

    pub fn total_pawns(&self) -> u8 {
        self.white.pawns + self.black.pawns
    }
}
