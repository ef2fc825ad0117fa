use chess_core::Position;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let fen = &args[1];
    let depth: u32 = args[2].parse().unwrap();
    let mut pos = Position::from_fen(fen).unwrap();
    for token in args.iter().skip(3) {
        let mv = pos
            .legal_moves()
            .into_iter()
            .find(|m| m.to_string() == *token)
            .unwrap_or_else(|| panic!("no move {token} in {}", pos.to_fen()));
        pos = pos.apply_move_unchecked(mv);
    }
    println!("at: {}", pos.to_fen());
    let mut total = 0;
    for mv in pos.legal_moves() {
        let n = pos.apply_move_unchecked(mv).perft(depth.saturating_sub(1));
        total += n;
        println!("{mv}: {n}");
    }
    println!("total: {total}");
}
