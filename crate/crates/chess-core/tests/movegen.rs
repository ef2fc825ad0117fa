use std::time::Instant;

use chess_core::{PieceKind, Position, Side, Square};

/// Published perft reference values for the starting position and the
/// standard torture positions (castling, en passant, promotions, pins).
#[test]
fn perft_start_position() {
    let start = Position::start();
    assert_eq!(start.perft(0), 1);
    assert_eq!(start.perft(1), 20);
    assert_eq!(start.perft(2), 400);
    assert_eq!(start.perft(3), 8902);
    assert_eq!(start.perft(4), 197_281);
}

#[test]
fn perft_start_depth4_under_one_second() {
    let start = Position::start();
    let clock = Instant::now();
    assert_eq!(start.perft(4), 197_281);
    assert!(
        clock.elapsed().as_secs_f64() < 1.0,
        "perft(start, 4) took {:?}",
        clock.elapsed()
    );
}

#[test]
fn perft_kiwipete() {
    let pos =
        Position::from_fen("r3k2r/p1ppqpb1/bn2pnp1/3PN3/1p2P3/2N2Q1p/PPPBBPPP/R3K2R w KQkq - 0 1")
            .unwrap();
    assert_eq!(pos.perft(1), 48);
    assert_eq!(pos.perft(2), 2039);
    assert_eq!(pos.perft(3), 97_862);
}

#[test]
fn perft_endgame_with_en_passant_pins() {
    let pos = Position::from_fen("8/2p5/3p4/KP5r/1R3p1k/8/4P1P1/8 w - - 0 1").unwrap();
    assert_eq!(pos.perft(1), 14);
    assert_eq!(pos.perft(2), 191);
    assert_eq!(pos.perft(3), 2812);
    assert_eq!(pos.perft(4), 43_238);
}

#[test]
fn perft_promotion_heavy() {
    let pos =
        Position::from_fen("r3k2r/Pppp1ppp/1b3nbN/nP6/BBP1P3/q4N2/Pp1P2PP/R2Q1RK1 w kq - 0 1")
            .unwrap();
    assert_eq!(pos.perft(1), 6);
    assert_eq!(pos.perft(2), 264);
    assert_eq!(pos.perft(3), 9467);
}

#[test]
fn perft_buggy_castling_catcher() {
    let pos =
        Position::from_fen("rnbq1k1r/pp1Pbppp/2p5/8/2B5/8/PPP1NnPP/RNBQK2R w KQ - 1 8").unwrap();
    assert_eq!(pos.perft(1), 44);
    assert_eq!(pos.perft(2), 1486);
    assert_eq!(pos.perft(3), 62_379);
}

#[test]
fn stalemate_has_no_moves() {
    let pos = Position::from_fen("k7/2Q5/2K5/8/8/8/8/8 b - - 0 1").unwrap();
    assert!(pos.legal_moves().is_empty());
    assert!(!pos.in_check());
}

#[test]
fn checkmate_perft_is_zero() {
    // Back-rank mate: black king h8 mated by the rook on a8.
    let pos = Position::from_fen("R6k/6pp/8/8/8/8/8/K7 b - - 0 1").unwrap();
    assert!(pos.legal_moves().is_empty());
    assert!(pos.in_check());
    assert_eq!(pos.perft(1), 0);
    assert_eq!(pos.perft(3), 0);
}

#[test]
fn move_order_is_deterministic_and_sorted() {
    let pos = Position::start();
    let moves = pos.legal_moves();
    let mut sorted = moves.clone();
    sorted.sort_by_key(|m| (m.from.index(), m.to.index(), m.promotion.map(|k| k as u8)));
    assert_eq!(moves, sorted);
    assert_eq!(moves, pos.legal_moves());
}

#[test]
fn promotions_expand_to_four_moves() {
    let pos = Position::from_fen("8/4P1k1/8/8/8/8/8/K7 w - - 0 1").unwrap();
    let moves = pos.legal_moves();
    let promos: Vec<PieceKind> = moves.iter().filter_map(|m| m.promotion).collect();
    assert_eq!(
        promos,
        vec![
            PieceKind::Knight,
            PieceKind::Bishop,
            PieceKind::Rook,
            PieceKind::Queen
        ]
    );
}

#[test]
fn light_move_fraction_of_start_is_half() {
    assert_eq!(Position::start().light_move_fraction().unwrap(), 0.5);
}

#[test]
fn light_fraction_after_e4_replies() {
    let start = Position::start();
    let e4 = start
        .legal_moves()
        .into_iter()
        .find(|m| m.to == "e4".parse::<Square>().unwrap() && m.from.file() == 5)
        .unwrap();
    let after_e4 = start.apply_move(e4).unwrap();
    let replies = after_e4.legal_moves();
    assert_eq!(replies.len(), 20);
    for reply in replies {
        let pos = after_e4.apply_move(reply).unwrap();
        let fraction = pos.light_move_fraction().unwrap();
        if reply.to_string() == "b7b5" {
            // The lone exception: 1...b5 truncates the f1-bishop's diagonal
            // at b5, costing a light destination (a6). 19 of 29 moves land
            // light, just under 2/3.
            assert_eq!(fraction, 19.0 / 29.0);
        } else {
            assert!(
                fraction >= 2.0 / 3.0 - 1e-12,
                "after 1.e4 {reply}, white light fraction {fraction} < 2/3"
            );
        }
    }
}

#[test]
fn light_and_dark_fractions_are_exact_complements() {
    let mut pos = Position::start();
    let mut state = 0x9e3779b97f4a7c15u64;
    for _ in 0..60 {
        let moves = pos.legal_moves();
        if moves.is_empty() {
            break;
        }
        assert_eq!(
            pos.light_move_fraction().unwrap() + pos.dark_move_fraction().unwrap(),
            1.0
        );
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        pos = pos.apply_move_unchecked(moves[(state >> 33) as usize % moves.len()]);
    }
}

#[test]
fn all_dark_king_moves_give_zero_fraction() {
    let pos = Position::from_fen("8/8/8/8/8/5k2/8/7K w - - 0 1").unwrap();
    let moves = pos.legal_moves();
    assert_eq!(moves.len(), 2); // g1 and h2, both dark
    assert_eq!(pos.light_move_fraction().unwrap(), 0.0);
}

#[test]
fn apply_move_rejects_illegal_moves() {
    let start = Position::start();
    let mut bogus = start.legal_moves()[0];
    bogus.to = "h8".parse().unwrap();
    let err = start.apply_move(bogus).unwrap_err();
    assert!(err.to_string().contains("illegal move"));
}

#[test]
fn applied_moves_never_leave_own_king_attacked() {
    // Random-walk a few games; every intermediate position must validate.
    let mut state = 0xdeadbeefcafef00du64;
    for _ in 0..10 {
        let mut pos = Position::start();
        for _ in 0..120 {
            let moves = pos.legal_moves();
            if moves.is_empty() {
                break;
            }
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let next = pos.apply_move(moves[(state >> 33) as usize % moves.len()]).unwrap();
            // Round-trip through FEN as an extra structural check.
            assert_eq!(Position::from_fen(&next.to_fen()).unwrap(), next);
            pos = next;
        }
    }
}

#[test]
fn material_census_start_and_minimal() {
    let census = Position::start().material_census();
    for side in [Side::White, Side::Black] {
        let c = census.side(side);
        assert_eq!(c.pawns, 8);
        assert_eq!(c.knights, 2);
        assert_eq!(c.bishops, 2);
        assert_eq!(c.light_bishops, 1);
        assert_eq!(c.dark_bishops, 1);
        assert_eq!(c.rooks, 2);
        assert_eq!(c.queens, 1);
        assert_eq!(c.kings, 1);
    }
    assert!(!census.opposite_colored_bishops());

    let pos = Position::from_fen("8/4k3/8/2b5/8/3B4/4K3/8 w - - 0 1").unwrap();
    let census = pos.material_census();
    assert_eq!(census.white.bishops, 1);
    assert_eq!(census.black.bishops, 1);
    assert_eq!(census.white.light_bishops, 1); // d3 is light
    assert_eq!(census.black.dark_bishops, 1); // c5 is dark
    assert!(census.opposite_colored_bishops());
    assert_eq!(census.total_pawns(), 0);

    let kings_only = Position::from_fen("4k3/8/8/8/8/8/8/4K3 w - - 0 1").unwrap();
    let census = kings_only.material_census();
    assert_eq!(census.white.kings, 1);
    assert_eq!(census.black.kings, 1);
    assert_eq!(census.white.pawns + census.white.knights + census.white.bishops, 0);
}
