//! Chess board representation, FEN parsing, legal move generation and
//! square-color statistics.
//!
//! The crate is built around [`Position`], an immutable value type holding a
//! full game state. Legal moves are generated under FIDE rules (check
//! evasion, pins, castling legality, en passant, promotion expansion) in a
//! deterministic order, which makes downstream scans reproducible.
//!
//! Besides ordinary move generation the crate exposes two statistics used by
//! corpus analysis: [`Position::light_move_fraction`], the share of legal
//! moves landing on a light square, and [`Position::material_census`], exact
//! piece counts with bishop square colors.
//!
//! ```
//! use chess_core::Position;
//!
//! let start = Position::start();
//! assert_eq!(start.legal_moves().len(), 20);
//! assert_eq!(start.light_move_fraction().unwrap(), 0.5);
//! ```

mod board;
mod fen;
mod movegen;
mod moves;
mod piece;
mod position;
mod square;

pub use board::{MaterialCensus, SideCensus};
pub use fen::FenError;
pub use moves::{ChessMove, MoveFlags};
pub use piece::{Piece, PieceKind, Side};
pub use position::{CastlingRights, IllegalMove, NoLegalMoves, Position};
pub use square::{Square, SquareColor};
