use crate::board::Board;
use crate::moves::{ChessMove, MoveFlags};
use crate::piece::{Piece, PieceKind, Side};
use crate::position::Position;
use crate::square::Square;

const KNIGHT_OFFSETS: [(i8, i8); 8] = [
    (1, 2),
    (2, 1),
    (2, -1),
    (1, -2),
    (-1, -2),
    (-2, -1),
    (-2, 1),
    (-1, 2),
];
const KING_OFFSETS: [(i8, i8); 8] = [
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, -1),
];
const BISHOP_RAYS: [(i8, i8); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
const ROOK_RAYS: [(i8, i8); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

/// True when `sq` is attacked by any piece of `attacker`.
pub(crate) fn is_attacked(board: &Board, sq: Square, attacker: Side) -> bool {
    // Pawns: a pawn on sq +/- (1, -dir) attacks sq.
    let dir = attacker.pawn_direction();
    for dfile in [-1i8, 1] {
        if let Some(from) = sq.offset(dfile, -dir) {
            if board.piece_at(from) == Some(Piece::new(attacker, PieceKind::Pawn)) {
                return true;
            }
        }
    }
    for (dfile, drank) in KNIGHT_OFFSETS {
        if let Some(from) = sq.offset(dfile, drank) {
            if board.piece_at(from) == Some(Piece::new(attacker, PieceKind::Knight)) {
                return true;
            }
        }
    }
    for (dfile, drank) in KING_OFFSETS {
        if let Some(from) = sq.offset(dfile, drank) {
            if board.piece_at(from) == Some(Piece::new(attacker, PieceKind::King)) {
                return true;
            }
        }
    }
    for (dfile, drank) in BISHOP_RAYS {
        if let Some(piece) = first_piece_on_ray(board, sq, dfile, drank) {
            if piece.side == attacker
                && (piece.kind == PieceKind::Bishop || piece.kind == PieceKind::Queen)
            {
                return true;
            }
        }
    }
    for (dfile, drank) in ROOK_RAYS {
        if let Some(piece) = first_piece_on_ray(board, sq, dfile, drank) {
            if piece.side == attacker
                && (piece.kind == PieceKind::Rook || piece.kind == PieceKind::Queen)
            {
                return true;
            }
        }
    }
    false
}

fn first_piece_on_ray(board: &Board, from: Square, dfile: i8, drank: i8) -> Option<Piece> {
    let mut sq = from;
    while let Some(next) = sq.offset(dfile, drank) {
        if let Some(piece) = board.piece_at(next) {
            return Some(piece);
        }
        sq = next;
    }
    None
}

/// Legal moves of the position, sorted by (from, to, promotion kind).
pub(crate) fn legal_moves(pos: &Position) -> Vec<ChessMove> {
    let us = pos.side_to_move;
    let mut moves = Vec::with_capacity(48);
    pseudo_legal_moves(pos, &mut moves);
    moves.retain(|&mv| {
        let next = pos.apply_move_unchecked(mv);
        let king = next
            .board
            .king_square(us)
            .expect("own king survives own move");
        !is_attacked(&next.board, king, us.opposite())
    });
    moves.sort_by_key(ChessMove::order_key);
    moves
}

fn pseudo_legal_moves(pos: &Position, out: &mut Vec<ChessMove>) {
    let us = pos.side_to_move;
    for (from, piece) in pos.board.occupied_by(us) {
        match piece.kind {
            PieceKind::Pawn => pawn_moves(pos, from, us, out),
            PieceKind::Knight => leaper_moves(pos, from, us, &KNIGHT_OFFSETS, out),
            PieceKind::King => leaper_moves(pos, from, us, &KING_OFFSETS, out),
            PieceKind::Bishop => slider_moves(pos, from, us, &BISHOP_RAYS, out),
            PieceKind::Rook => slider_moves(pos, from, us, &ROOK_RAYS, out),
            PieceKind::Queen => {
                slider_moves(pos, from, us, &BISHOP_RAYS, out);
                slider_moves(pos, from, us, &ROOK_RAYS, out);
            }
        }
    }
    castling_moves(pos, out);
}

fn push_pawn_move(from: Square, to: Square, flags: MoveFlags, out: &mut Vec<ChessMove>) {
    if to.rank() == 1 || to.rank() == 8 {
        for kind in PieceKind::PROMOTIONS {
            out.push(ChessMove {
                from,
                to,
                promotion: Some(kind),
                flags,
            });
        }
    } else {
        out.push(ChessMove {
            from,
            to,
            promotion: None,
            flags,
        });
    }
}

fn pawn_moves(pos: &Position, from: Square, us: Side, out: &mut Vec<ChessMove>) {
    let dir = us.pawn_direction();
    let start_rank = match us {
        Side::White => 2,
        Side::Black => 7,
    };

    if let Some(to) = from.offset(0, dir) {
        if pos.board.piece_at(to).is_none() {
            push_pawn_move(from, to, MoveFlags::default(), out);
            if from.rank() == start_rank {
                let two = to.offset(0, dir).expect("double push stays on board");
                if pos.board.piece_at(two).is_none() {
                    out.push(ChessMove {
                        from,
                        to: two,
                        promotion: None,
                        flags: MoveFlags {
                            double_pawn_push: true,
                            ..MoveFlags::default()
                        },
                    });
                }
            }
        }
    }

    for dfile in [-1i8, 1] {
        let Some(to) = from.offset(dfile, dir) else {
            continue;
        };
        match pos.board.piece_at(to) {
            Some(target) if target.side != us => {
                push_pawn_move(
                    from,
                    to,
                    MoveFlags {
                        capture: true,
                        ..MoveFlags::default()
                    },
                    out,
                );
            }
            None if pos.en_passant == Some(to) => {
                out.push(ChessMove {
                    from,
                    to,
                    promotion: None,
                    flags: MoveFlags {
                        capture: true,
                        en_passant: true,
                        ..MoveFlags::default()
                    },
                });
            }
            _ => {}
        }
    }
}

fn leaper_moves(
    pos: &Position,
    from: Square,
    us: Side,
    offsets: &[(i8, i8)],
    out: &mut Vec<ChessMove>,
) {
    for &(dfile, drank) in offsets {
        let Some(to) = from.offset(dfile, drank) else {
            continue;
        };
        match pos.board.piece_at(to) {
            Some(p) if p.side == us => {}
            occupant => out.push(ChessMove {
                from,
                to,
                promotion: None,
                flags: MoveFlags {
                    capture: occupant.is_some(),
                    ..MoveFlags::default()
                },
            }),
        }
    }
}

fn slider_moves(
    pos: &Position,
    from: Square,
    us: Side,
    rays: &[(i8, i8)],
    out: &mut Vec<ChessMove>,
) {
    for &(dfile, drank) in rays {
        let mut sq = from;
        while let Some(to) = sq.offset(dfile, drank) {
            match pos.board.piece_at(to) {
                None => {
                    out.push(ChessMove {
                        from,
                        to,
                        promotion: None,
                        flags: MoveFlags::default(),
                    });
                    sq = to;
                }
                Some(p) => {
                    if p.side != us {
                        out.push(ChessMove {
                            from,
                            to,
                            promotion: None,
                            flags: MoveFlags {
                                capture: true,
                                ..MoveFlags::default()
                            },
                        });
                    }
                    break;
                }
            }
        }
    }
}

fn castling_moves(pos: &Position, out: &mut Vec<ChessMove>) {
    let us = pos.side_to_move;
    let them = us.opposite();
    let rank = match us {
        Side::White => 1,
        Side::Black => 8,
    };
    let (kingside, queenside) = match us {
        Side::White => (pos.castling.white_kingside, pos.castling.white_queenside),
        Side::Black => (pos.castling.black_kingside, pos.castling.black_queenside),
    };
    let king_sq = Square::new(5, rank).unwrap();
    if pos.board.piece_at(king_sq) != Some(Piece::new(us, PieceKind::King)) {
        return;
    }

    if kingside
        && pos.board.piece_at(Square::new(8, rank).unwrap()) == Some(Piece::new(us, PieceKind::Rook))
        && pos.board.piece_at(Square::new(6, rank).unwrap()).is_none()
        && pos.board.piece_at(Square::new(7, rank).unwrap()).is_none()
        && !is_attacked(&pos.board, king_sq, them)
        && !is_attacked(&pos.board, Square::new(6, rank).unwrap(), them)
        && !is_attacked(&pos.board, Square::new(7, rank).unwrap(), them)
    {
        out.push(ChessMove {
            from: king_sq,
            to: Square::new(7, rank).unwrap(),
            promotion: None,
            flags: MoveFlags {
                castle_kingside: true,
                ..MoveFlags::default()
            },
        });
    }

    if queenside
        && pos.board.piece_at(Square::new(1, rank).unwrap()) == Some(Piece::new(us, PieceKind::Rook))
        && pos.board.piece_at(Square::new(2, rank).unwrap()).is_none()
        && pos.board.piece_at(Square::new(3, rank).unwrap()).is_none()
        && pos.board.piece_at(Square::new(4, rank).unwrap()).is_none()
        && !is_attacked(&pos.board, king_sq, them)
        && !is_attacked(&pos.board, Square::new(4, rank).unwrap(), them)
        && !is_attacked(&pos.board, Square::new(3, rank).unwrap(), them)
    {
        out.push(ChessMove {
            from: king_sq,
            to: Square::new(3, rank).unwrap(),
            promotion: None,
            flags: MoveFlags {
                castle_queenside: true,
                ..MoveFlags::default()
            },
        });
    }
}

/// Returns `ep_square` when a pawn of `capturer` can legally capture en
/// passant onto it; otherwise `None`. Used to normalize the en passant field
/// so positions and FEN output only carry usable targets.
pub(crate) fn usable_en_passant(
    board: &Board,
    ep_square: Square,
    capturer: Side,
) -> Option<Square> {
    let dir = capturer.pawn_direction();
    let captured_sq = ep_square.offset(0, -dir)?;
    if board.piece_at(captured_sq) != Some(Piece::new(capturer.opposite(), PieceKind::Pawn)) {
        return None;
    }
    let king = board.king_square(capturer)?;
    for dfile in [-1i8, 1] {
        let Some(from) = ep_square.offset(dfile, -dir) else {
            continue;
        };
        if board.piece_at(from) != Some(Piece::new(capturer, PieceKind::Pawn)) {
            continue;
        }
        // Simulate the capture and insist the capturer's king stays safe.
        let mut after = *board;
        after.set(from, None);
        after.set(captured_sq, None);
        after.set(ep_square, Some(Piece::new(capturer, PieceKind::Pawn)));
        if !is_attacked(&after, king, capturer.opposite()) {
            return Some(ep_square);
        }
    }
    None
}
