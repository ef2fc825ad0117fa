use thiserror::Error;

use crate::board::{Board, MaterialCensus};
use crate::movegen;
use crate::moves::ChessMove;
use crate::piece::{Piece, PieceKind, Side};
use crate::square::Square;

/// Castling availability for both sides.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct CastlingRights {
    pub white_kingside: bool,
    pub white_queenside: bool,
    pub black_kingside: bool,
    pub black_queenside: bool,
}

impl CastlingRights {
    pub fn any(&self) -> bool {
        self.white_kingside || self.white_queenside || self.black_kingside || self.black_queenside
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("illegal move {mv} in position {fen}")]
pub struct IllegalMove {
    pub mv: String,
    pub fen: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("no legal moves in position {fen}: move-destination probability is undefined")]
pub struct NoLegalMoves {
    pub fen: String,
}

/// A full game state: placement, side to move, castling rights, en passant
/// target and move clocks. Instances are immutable; applying a move yields a
/// new position.
///
/// The en passant target is normalized on construction: it is retained only
/// when at least one legal en passant capture actually exists. FEN output
/// follows the same convention.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Position {
    pub(crate) board: Board,
    pub(crate) side_to_move: Side,
    pub(crate) castling: CastlingRights,
    pub(crate) en_passant: Option<Square>,
    pub(crate) halfmove_clock: u32,
    pub(crate) fullmove_number: u32,
}

impl Position {
    /// The standard starting position.
    pub fn start() -> Position {
        Position::from_fen("rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1")
            .expect("start position FEN is valid")
    }

    pub fn from_fen(fen: &str) -> Result<Position, crate::fen::FenError> {
        crate::fen::parse_fen(fen)
    }

    pub fn to_fen(&self) -> String {
        crate::fen::to_fen(self)
    }

    pub fn side_to_move(&self) -> Side {
        self.side_to_move
    }

    pub fn castling_rights(&self) -> CastlingRights {
        self.castling
    }

    pub fn en_passant_target(&self) -> Option<Square> {
        self.en_passant
    }

    pub fn halfmove_clock(&self) -> u32 {
        self.halfmove_clock
    }

    pub fn fullmove_number(&self) -> u32 {
        self.fullmove_number
    }

    pub fn piece_at(&self, sq: Square) -> Option<Piece> {
        self.board.piece_at(sq)
    }

    /// All legal moves in deterministic order: sorted by (from, to,
    /// promotion kind). Checkmate and stalemate yield an empty list.
    pub fn legal_moves(&self) -> Vec<ChessMove> {
        movegen::legal_moves(self)
    }

    pub fn in_check(&self) -> bool {
        let king = self
            .board
            .king_square(self.side_to_move)
            .expect("valid position has a king per side");
        movegen::is_attacked(&self.board, king, self.side_to_move.opposite())
    }

    /// Applies a move after verifying it is legal here.
    pub fn apply_move(&self, mv: ChessMove) -> Result<Position, IllegalMove> {
        if self.legal_moves().contains(&mv) {
            Ok(self.apply_move_unchecked(mv))
        } else {
            Err(IllegalMove {
                mv: mv.to_string(),
                fen: self.to_fen(),
            })
        }
    }

    /// Applies a move assumed to come from [`Position::legal_moves`].
    /// Skipping the legality check makes bulk replay cheap; feeding an
    /// illegal move produces an unspecified position.
    pub fn apply_move_unchecked(&self, mv: ChessMove) -> Position {
        let mut board = self.board;
        let mover = board
            .piece_at(mv.from)
            .expect("move source square is occupied");

        board.set(mv.from, None);
        if mv.flags.en_passant {
            // The captured pawn sits beside the destination, on the mover's
            // starting rank side.
            let captured =
                Square::new(mv.to.file(), mv.from.rank()).expect("en passant capture square");
            board.set(captured, None);
        }
        let placed = match mv.promotion {
            Some(kind) => Piece::new(mover.side, kind),
            None => mover,
        };
        board.set(mv.to, Some(placed));

        if mv.flags.castle_kingside || mv.flags.castle_queenside {
            let rank = mv.from.rank();
            let (rook_from, rook_to) = if mv.flags.castle_kingside {
                (Square::new(8, rank).unwrap(), Square::new(6, rank).unwrap())
            } else {
                (Square::new(1, rank).unwrap(), Square::new(4, rank).unwrap())
            };
            let rook = board.piece_at(rook_from);
            board.set(rook_from, None);
            board.set(rook_to, rook);
        }

        let mut castling = self.castling;
        let touched = [mv.from, mv.to];
        for sq in touched {
            match (sq.file(), sq.rank()) {
                (5, 1) => {
                    castling.white_kingside = false;
                    castling.white_queenside = false;
                }
                (5, 8) => {
                    castling.black_kingside = false;
                    castling.black_queenside = false;
                }
                (1, 1) => castling.white_queenside = false,
                (8, 1) => castling.white_kingside = false,
                (1, 8) => castling.black_queenside = false,
                (8, 8) => castling.black_kingside = false,
                _ => {}
            }
        }

        let halfmove_clock = if mover.kind == PieceKind::Pawn || mv.flags.capture {
            0
        } else {
            self.halfmove_clock + 1
        };
        let fullmove_number = match self.side_to_move {
            Side::White => self.fullmove_number,
            Side::Black => self.fullmove_number + 1,
        };

        let en_passant = if mv.flags.double_pawn_push {
            let skipped = Square::new(
                mv.from.file(),
                (mv.from.rank() as i8 + mover.side.pawn_direction()) as u8,
            )
            .expect("skipped square of a double push");
            movegen::usable_en_passant(&board, skipped, mover.side.opposite())
        } else {
            None
        };

        Position {
            board,
            side_to_move: self.side_to_move.opposite(),
            castling,
            en_passant,
            halfmove_clock,
            fullmove_number,
        }
    }

    /// Leaf count of the legal-move tree; the standard move generator
    /// correctness oracle.
    pub fn perft(&self, depth: u32) -> u64 {
        if depth == 0 {
            return 1;
        }
        let moves = self.legal_moves();
        if depth == 1 {
            return moves.len() as u64;
        }
        moves
            .iter()
            .map(|&mv| self.apply_move_unchecked(mv).perft(depth - 1))
            .sum()
    }

    /// Fraction of legal moves whose destination square is light.
    ///
    /// Errors when there is no legal move (the game is over and the
    /// probability is undefined).
    pub fn light_move_fraction(&self) -> Result<f64, NoLegalMoves> {
        let moves = self.legal_moves();
        if moves.is_empty() {
            return Err(NoLegalMoves { fen: self.to_fen() });
        }
        let light = moves.iter().filter(|m| m.destination().is_light()).count();
        Ok(light as f64 / moves.len() as f64)
    }

    /// Complement of [`Position::light_move_fraction`] over the same move
    /// list.
    pub fn dark_move_fraction(&self) -> Result<f64, NoLegalMoves> {
        let moves = self.legal_moves();
        if moves.is_empty() {
            return Err(NoLegalMoves { fen: self.to_fen() });
        }
        let dark = moves.iter().filter(|m| !m.destination().is_light()).count();
        Ok(dark as f64 / moves.len() as f64)
    }

    pub fn material_census(&self) -> MaterialCensus {
        MaterialCensus::from_board(&self.board)
    }

    /// Validates the structural invariants enforced on every constructed
    /// position: one king per side, kings not adjacent, the side not to move
    /// not in check, at most eight pawns per side, no pawns on the first or
    /// last rank.
    pub(crate) fn validate(&self) -> Result<(), String> {
        for side in [Side::White, Side::Black] {
            let kings = self.board.count(side, PieceKind::King);
            if kings != 1 {
                return Err(format!("{side} has {kings} kings, expected exactly 1"));
            }
            let pawns = self.board.count(side, PieceKind::Pawn);
            if pawns > 8 {
                return Err(format!("{side} has {pawns} pawns, expected at most 8"));
            }
        }
        let wk = self.board.king_square(Side::White).unwrap();
        let bk = self.board.king_square(Side::Black).unwrap();
        let file_gap = (wk.file() as i8 - bk.file() as i8).abs();
        let rank_gap = (wk.rank() as i8 - bk.rank() as i8).abs();
        if file_gap <= 1 && rank_gap <= 1 {
            return Err("kings are adjacent".to_string());
        }
        for sq in Square::all() {
            if let Some(piece) = self.board.piece_at(sq) {
                if piece.kind == PieceKind::Pawn && (sq.rank() == 1 || sq.rank() == 8) {
                    return Err(format!("pawn on back rank at {sq}"));
                }
            }
        }
        let idle = self.side_to_move.opposite();
        let idle_king = self.board.king_square(idle).unwrap();
        if movegen::is_attacked(&self.board, idle_king, self.side_to_move) {
            return Err(format!("{idle} is in check but it is not their move"));
        }
        Ok(())
    }
}

impl std::fmt::Debug for Position {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Position({})", self.to_fen())
    }
}
