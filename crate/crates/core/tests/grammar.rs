use fsrx::regex::parse_str;

const GRAMMAR: &str = include_str!("../docs/grammar.ebnf");

#[test]
fn documented_parse_trees() {
    let golden: Vec<(&str, &str)> = GRAMMAR
        .lines()
        .filter_map(|l| l.trim().strip_prefix("golden:"))
        .map(|l| {
            let (input, tree) = l.split_once("=>").expect("golden line needs =>");
            (input.trim(), tree.trim())
        })
        .collect();
    assert!(golden.len() >= 20);
    for (input, tree) in golden {
        let parsed = parse_str(input).unwrap_or_else(|e| panic!("{input}: {e}"));
        assert_eq!(parsed.to_string(), tree, "{input}");
    }
}
