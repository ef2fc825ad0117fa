// Brute-force cross-check: enumerate all (from,to,promo) candidates, filter by
// piece geometry + path + king safety, diff against legal_moves().
use chess_core::{ChessMove, MoveFlags, Piece, PieceKind, Position, Side, Square};

fn dumb_moves(pos: &Position) -> Vec<String> {
    let us = pos.side_to_move();
    let mut out = Vec::new();
    for from in Square::all() {
        let Some(piece) = pos.piece_at(from) else { continue };
        if piece.side != us { continue }
        for to in Square::all() {
            if to == from { continue }
            let df = to.file() as i8 - from.file() as i8;
            let dr = to.rank() as i8 - from.rank() as i8;
            let occ = pos.piece_at(to);
            if occ.map(|p| p.side) == Some(us) && piece.kind != PieceKind::King { continue }
            if occ.map(|p| p.side) == Some(us) { continue }
            let clear = |pos: &Position| {
                let steps = df.abs().max(dr.abs());
                let sf = df.signum();
                let sr = dr.signum();
                (1..steps).all(|i| {
                    pos.piece_at(from.offset(sf * i, sr * i).unwrap()).is_none()
                })
            };
            let geom_ok = match piece.kind {
                PieceKind::Knight => (df.abs() == 1 && dr.abs() == 2) || (df.abs() == 2 && dr.abs() == 1),
                PieceKind::King => df.abs() <= 1 && dr.abs() <= 1,
                PieceKind::Bishop => df.abs() == dr.abs() && clear(pos),
                PieceKind::Rook => (df == 0 || dr == 0) && clear(pos),
                PieceKind::Queen => (df.abs() == dr.abs() || df == 0 || dr == 0) && clear(pos),
                PieceKind::Pawn => {
                    let dir = if us == Side::White { 1 } else { -1 };
                    let start = if us == Side::White { 2 } else { 7 };
                    (df == 0 && dr == dir && occ.is_none())
                        || (df == 0 && dr == 2 * dir && from.rank() == start && occ.is_none() && clear(pos))
                        || (df.abs() == 1 && dr == dir && (occ.is_some() || pos.en_passant_target() == Some(to)))
                }
            };
            if !geom_ok { continue }
            let is_ep = piece.kind == PieceKind::Pawn && df.abs() == 1 && occ.is_none();
            let promo_kinds: Vec<Option<PieceKind>> =
                if piece.kind == PieceKind::Pawn && (to.rank() == 8 || to.rank() == 1) {
                    PieceKind::PROMOTIONS.iter().copied().map(Some).collect()
                } else {
                    vec![None]
                };
            for promotion in promo_kinds {
                let mv = ChessMove {
                    from, to, promotion,
                    flags: MoveFlags {
                        capture: occ.is_some() || is_ep,
                        en_passant: is_ep,
                        double_pawn_push: piece.kind == PieceKind::Pawn && dr.abs() == 2,
                        ..MoveFlags::default()
                    },
                };
                let next = pos.apply_move_unchecked(mv);
                // own king safe?
                let mut safe = true;
                if let Some(k) = Square::all().find(|&s| next.piece_at(s) == Some(Piece::new(us, PieceKind::King))) {
                    let probe = format!("{} {} - - 0 1", fen_board(&next), if us == Side::White { "b" } else { "w" });
                    let _ = probe; // use movegen-independent check below
                    safe = !attacked_by(&next, k, if us == Side::White { Side::Black } else { Side::White });
                } else { safe = false; }
                if safe { out.push(mv.to_string()); }
            }
        }
    }
    // castling via legal_moves of a rights-preserving probe is cheating; hand-roll:
    let rank = if us == Side::White { 1 } else { 8 };
    let rights = pos.castling_rights();
    let (ks, qs) = if us == Side::White {
        (rights.white_kingside, rights.white_queenside)
    } else {
        (rights.black_kingside, rights.black_queenside)
    };
    let e = Square::new(5, rank).unwrap();
    let them = if us == Side::White { Side::Black } else { Side::White };
    if ks && pos.piece_at(Square::new(6, rank).unwrap()).is_none()
        && pos.piece_at(Square::new(7, rank).unwrap()).is_none()
        && pos.piece_at(e) == Some(Piece::new(us, PieceKind::King))
        && pos.piece_at(Square::new(8, rank).unwrap()) == Some(Piece::new(us, PieceKind::Rook))
        && !attacked_by(pos, e, them)
        && !attacked_by(pos, Square::new(6, rank).unwrap(), them)
        && !attacked_by(pos, Square::new(7, rank).unwrap(), them)
    {
        out.push(format!("{}{}", e, Square::new(7, rank).unwrap()));
    }
    if qs && pos.piece_at(Square::new(2, rank).unwrap()).is_none()
        && pos.piece_at(Square::new(3, rank).unwrap()).is_none()
        && pos.piece_at(Square::new(4, rank).unwrap()).is_none()
        && pos.piece_at(e) == Some(Piece::new(us, PieceKind::King))
        && pos.piece_at(Square::new(1, rank).unwrap()) == Some(Piece::new(us, PieceKind::Rook))
        && !attacked_by(pos, e, them)
        && !attacked_by(pos, Square::new(4, rank).unwrap(), them)
        && !attacked_by(pos, Square::new(3, rank).unwrap(), them)
    {
        out.push(format!("{}{}", e, Square::new(3, rank).unwrap()));
    }
    out.sort();
    out.dedup();
    out
}

fn fen_board(pos: &Position) -> String {
    pos.to_fen().split(' ').next().unwrap().to_string()
}

// independent attack check: any enemy piece geometrically reaches sq with clear path
fn attacked_by(pos: &Position, sq: Square, attacker: Side) -> bool {
    for from in Square::all() {
        let Some(piece) = pos.piece_at(from) else { continue };
        if piece.side != attacker { continue }
        let df = sq.file() as i8 - from.file() as i8;
        let dr = sq.rank() as i8 - from.rank() as i8;
        if df == 0 && dr == 0 { continue }
        let clear = || {
            let steps = df.abs().max(dr.abs());
            let sf = df.signum();
            let sr = dr.signum();
            (1..steps).all(|i| pos.piece_at(from.offset(sf * i, sr * i).unwrap()).is_none())
        };
        let hits = match piece.kind {
            PieceKind::Knight => (df.abs() == 1 && dr.abs() == 2) || (df.abs() == 2 && dr.abs() == 1),
            PieceKind::King => df.abs() <= 1 && dr.abs() <= 1,
            PieceKind::Bishop => df.abs() == dr.abs() && clear(),
            PieceKind::Rook => (df == 0 || dr == 0) && clear(),
            PieceKind::Queen => (df.abs() == dr.abs() || df == 0 || dr == 0) && clear(),
            PieceKind::Pawn => {
                let dir = if attacker == Side::White { 1 } else { -1 };
                df.abs() == 1 && dr == dir
            }
        };
        if hits { return true }
    }
    false
}

fn walk(pos: &Position, depth: u32, path: &str) -> bool {
    let mine: Vec<String> = pos.legal_moves().iter().map(|m| m.to_string()).collect();
    let mut mine_sorted = mine.clone();
    mine_sorted.sort();
    let dumb = dumb_moves(pos);
    if mine_sorted != dumb {
        println!("DIVERGENCE at [{path}] fen={}", pos.to_fen());
        println!("  mine: {mine_sorted:?}");
        println!("  dumb: {dumb:?}");
        return false;
    }
    if depth == 0 { return true }
    for mv in pos.legal_moves() {
        let next = pos.apply_move_unchecked(mv);
        if !walk(&next, depth - 1, &format!("{path} {mv}")) {
            return false;
        }
    }
    true
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let pos = Position::from_fen(&args[1]).unwrap();
    let depth: u32 = args[2].parse().unwrap();
    if walk(&pos, depth, "") {
        println!("no divergence to depth {depth}");
    }
}
