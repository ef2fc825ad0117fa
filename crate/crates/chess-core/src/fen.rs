use thiserror::Error;

use crate::board::Board;
use crate::movegen;
use crate::piece::{Piece, PieceKind, Side};
use crate::position::{CastlingRights, Position};
use crate::square::Square;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FenError {
    #[error("FEN record must have 6 fields, found {0}")]
    FieldCount(usize),
    #[error("placement field invalid: {0}")]
    Placement(String),
    #[error("side-to-move field invalid: {0:?} (expected \"w\" or \"b\")")]
    SideToMove(String),
    #[error("castling field invalid: {0:?}")]
    Castling(String),
    #[error("en passant field invalid: {0:?}")]
    EnPassant(String),
    #[error("halfmove clock invalid: {0:?}")]
    HalfmoveClock(String),
    #[error("fullmove number invalid: {0:?} (must be a positive integer)")]
    FullmoveNumber(String),
    #[error("illegal placement: {0}")]
    IllegalPlacement(String),
}

pub(crate) fn parse_fen(text: &str) -> Result<Position, FenError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 6 {
        return Err(FenError::FieldCount(fields.len()));
    }

    let board = parse_placement(fields[0])?;

    let side_to_move = match fields[1] {
        "w" => Side::White,
        "b" => Side::Black,
        other => return Err(FenError::SideToMove(other.to_string())),
    };

    let castling = parse_castling(fields[2], &board)?;

    let en_passant = match fields[3] {
        "-" => None,
        sq => {
            let square: Square = sq
                .parse()
                .map_err(|()| FenError::EnPassant(sq.to_string()))?;
            let expected_rank = match side_to_move {
                Side::White => 6,
                Side::Black => 3,
            };
            if square.rank() != expected_rank {
                return Err(FenError::EnPassant(sq.to_string()));
            }
            Some(square)
        }
    };

    let halfmove_clock: u32 = fields[4]
        .parse()
        .map_err(|_| FenError::HalfmoveClock(fields[4].to_string()))?;
    let fullmove_number: u32 = fields[5]
        .parse()
        .ok()
        .filter(|&n| n >= 1)
        .ok_or_else(|| FenError::FullmoveNumber(fields[5].to_string()))?;

    // Keep the en passant target only when a capture is actually possible;
    // FEN output follows the same convention, so round-trips are canonical.
    let en_passant =
        en_passant.and_then(|sq| movegen::usable_en_passant(&board, sq, side_to_move));

    let pos = Position {
        board,
        side_to_move,
        castling,
        en_passant,
        halfmove_clock,
        fullmove_number,
    };
    pos.validate().map_err(FenError::IllegalPlacement)?;
    Ok(pos)
}

fn parse_placement(field: &str) -> Result<Board, FenError> {
    let mut board = Board::empty();
    let ranks: Vec<&str> = field.split('/').collect();
    if ranks.len() != 8 {
        return Err(FenError::Placement(format!(
            "expected 8 ranks, found {}",
            ranks.len()
        )));
    }
    for (row, rank_text) in ranks.iter().enumerate() {
        let rank = 8 - row as u8;
        let mut file = 1u8;
        for c in rank_text.chars() {
            if let Some(skip) = c.to_digit(10) {
                if skip == 0 || skip > 8 {
                    return Err(FenError::Placement(format!(
                        "invalid skip digit {c} in rank {rank}"
                    )));
                }
                file += skip as u8;
            } else {
                let piece = Piece::from_fen_char(c).ok_or_else(|| {
                    FenError::Placement(format!("unknown piece letter {c:?} in rank {rank}"))
                })?;
                let sq = Square::new(file, rank).ok_or_else(|| {
                    FenError::Placement(format!("rank {rank} overflows past file h"))
                })?;
                board.set(sq, Some(piece));
                file += 1;
            }
        }
        if file != 9 {
            return Err(FenError::Placement(format!(
                "rank {rank} describes {} files, expected 8",
                file - 1
            )));
        }
    }
    Ok(board)
}

fn parse_castling(field: &str, board: &Board) -> Result<CastlingRights, FenError> {
    let mut rights = CastlingRights::default();
    if field != "-" {
        for c in field.chars() {
            match c {
                'K' => rights.white_kingside = true,
                'Q' => rights.white_queenside = true,
                'k' => rights.black_kingside = true,
                'q' => rights.black_queenside = true,
                _ => return Err(FenError::Castling(field.to_string())),
            }
        }
    }
    // Drop rights whose king or rook has left its home square.
    let home = |file, rank, side, kind| {
        board.piece_at(Square::new(file, rank).unwrap()) == Some(Piece::new(side, kind))
    };
    let white_king = home(5, 1, Side::White, PieceKind::King);
    let black_king = home(5, 8, Side::Black, PieceKind::King);
    rights.white_kingside &= white_king && home(8, 1, Side::White, PieceKind::Rook);
    rights.white_queenside &= white_king && home(1, 1, Side::White, PieceKind::Rook);
    rights.black_kingside &= black_king && home(8, 8, Side::Black, PieceKind::Rook);
    rights.black_queenside &= black_king && home(1, 8, Side::Black, PieceKind::Rook);
    Ok(rights)
}

pub(crate) fn to_fen(pos: &Position) -> String {
    let mut out = String::with_capacity(80);
    for row in 0..8 {
        let rank = 8 - row;
        let mut empty = 0;
        for file in 1..=8 {
            let sq = Square::new(file, rank).unwrap();
            match pos.board.piece_at(sq) {
                None => empty += 1,
                Some(piece) => {
                    if empty > 0 {
                        out.push(char::from_digit(empty, 10).unwrap());
                        empty = 0;
                    }
                    out.push(piece.fen_char());
                }
            }
        }
        if empty > 0 {
            out.push(char::from_digit(empty, 10).unwrap());
        }
        if row != 7 {
            out.push('/');
        }
    }

    out.push(' ');
    out.push(match pos.side_to_move {
        Side::White => 'w',
        Side::Black => 'b',
    });

    out.push(' ');
    if pos.castling.any() {
        if pos.castling.white_kingside {
            out.push('K');
        }
        if pos.castling.white_queenside {
            out.push('Q');
        }
        if pos.castling.black_kingside {
            out.push('k');
        }
        if pos.castling.black_queenside {
            out.push('q');
        }
    } else {
        out.push('-');
    }

    out.push(' ');
    match pos.en_passant {
        Some(sq) => out.push_str(&sq.to_string()),
        None => out.push('-'),
    }

    out.push_str(&format!(" {} {}", pos.halfmove_clock, pos.fullmove_number));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::square::Square;

    const START: &str = "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1";

    #[test]
    fn start_position_round_trips() {
        let pos = parse_fen(START).unwrap();
        assert_eq!(to_fen(&pos), START);
        assert_eq!(pos.side_to_move(), Side::White);
        assert_eq!(pos.fullmove_number(), 1);
    }

    #[test]
    fn bishop_position_round_trips_with_colors() {
        let fen = "8/4k3/8/2b5/8/3B4/4K3/8 w - - 0 1";
        let pos = parse_fen(fen).unwrap();
        assert_eq!(to_fen(&pos), fen);
        let c5: Square = "c5".parse().unwrap();
        let d3: Square = "d3".parse().unwrap();
        assert!(!c5.is_light());
        assert!(d3.is_light());
        assert_eq!(pos.piece_at(c5).unwrap().kind, PieceKind::Bishop);
        assert_eq!(pos.piece_at(d3).unwrap().kind, PieceKind::Bishop);
    }

    #[test]
    fn empty_board_is_rejected_for_missing_kings() {
        let err = parse_fen("8/8/8/8/8/8/8/8 w - - 0 1").unwrap_err();
        assert!(matches!(err, FenError::IllegalPlacement(_)));
        assert!(err.to_string().contains("kings"));
    }

    #[test]
    fn two_white_kings_are_rejected() {
        let err = parse_fen("4k3/8/8/8/8/8/8/2K1K3 w - - 0 1").unwrap_err();
        assert!(matches!(err, FenError::IllegalPlacement(_)));
    }

    #[test]
    fn malformed_fields_name_the_field() {
        assert_eq!(
            parse_fen("8/8/8/8/8/8/8/8 w - -").unwrap_err(),
            FenError::FieldCount(4)
        );
        assert!(matches!(
            parse_fen("4k3/8/8/8/8/8/8/4K3 x - - 0 1").unwrap_err(),
            FenError::SideToMove(_)
        ));
        assert!(matches!(
            parse_fen("4k3/8/8/8/8/8/8/4K3 w KX - 0 1").unwrap_err(),
            FenError::Castling(_)
        ));
        assert!(matches!(
            parse_fen("4k3/8/8/8/8/8/8/4K3 w - e9 0 1").unwrap_err(),
            FenError::EnPassant(_)
        ));
        assert!(matches!(
            parse_fen("4k3/8/8/8/8/8/8/4K3 w - - x 1").unwrap_err(),
            FenError::HalfmoveClock(_)
        ));
        assert!(matches!(
            parse_fen("4k3/8/8/8/8/8/8/4K3 w - - 0 0").unwrap_err(),
            FenError::FullmoveNumber(_)
        ));
        assert!(matches!(
            parse_fen("4k3/8/8/8/8/8/7/4K3 w - - 0 1").unwrap_err(),
            FenError::Placement(_)
        ));
    }

    #[test]
    fn en_passant_field_kept_only_when_capturable() {
        // After 1.e4 from the start no black pawn reaches e3: field is "-".
        let start = parse_fen(START).unwrap();
        let e4 = start
            .legal_moves()
            .into_iter()
            .find(|m| m.flags.double_pawn_push && m.to == "e4".parse().unwrap())
            .unwrap();
        let after = start.apply_move_unchecked(e4);
        assert_eq!(
            to_fen(&after),
            "rnbqkbnr/pppppppp/8/8/4P3/8/PPPP1PPP/RNBQKBNR b KQkq - 0 1"
        );

        // With a black pawn on d4 the double push leaves a usable target.
        let pos = parse_fen("4k3/8/8/8/3p4/8/4P3/4K3 w - - 0 1").unwrap();
        let e4 = pos
            .legal_moves()
            .into_iter()
            .find(|m| m.flags.double_pawn_push)
            .unwrap();
        let after = pos.apply_move_unchecked(e4);
        assert_eq!(after.en_passant_target(), Some("e3".parse().unwrap()));
        assert_eq!(to_fen(&after), "4k3/8/8/8/3pP3/8/8/4K3 b - e3 0 1");

        // Parsing an unusable target normalizes it away.
        let normalized = parse_fen("4k3/8/8/8/4P3/8/8/4K3 b - e3 0 1").unwrap();
        assert_eq!(normalized.en_passant_target(), None);
    }

    #[test]
    fn castling_rights_dropped_when_rook_or_king_moved_away() {
        let pos = parse_fen("4k3/8/8/8/8/8/8/R3K3 w KQkq - 0 1").unwrap();
        let rights = pos.castling_rights();
        assert!(rights.white_queenside);
        assert!(!rights.white_kingside);
        assert!(!rights.black_kingside);
        assert!(!rights.black_queenside);
    }

    #[test]
    fn side_not_to_move_may_not_be_in_check() {
        // White queen gives check to the black king, but it is white to move.
        let err = parse_fen("4k3/4Q3/8/8/8/8/8/4K3 w - - 0 1").unwrap_err();
        assert!(matches!(err, FenError::IllegalPlacement(_)));
    }
}

