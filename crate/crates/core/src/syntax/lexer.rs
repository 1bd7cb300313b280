use num::{BigInt, BigRational};

use super::ParseError;

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Ident(String),
    Num(BigRational),
    Plus,
    Minus,
    Star,
    Wedge,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Token {
    pub tok: Tok,
    pub offset: usize,
}

pub fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let simple = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'^' => Some(Tok::Caret),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, offset: start });
            i += 1;
            continue;
        }
        if c == b'/' {
            if bytes.get(i + 1) == Some(&b'\\') {
                out.push(Token { tok: Tok::Wedge, offset: start });
                i += 2;
                continue;
            }
            return Err(ParseError::Lex { offset: start, found: '/' });
        }
        if c.is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let numer: BigInt = src[start..i].parse().unwrap();
            // "3/2" is a rational literal; "/\" after a number is a wedge
            let mut value = BigRational::from_integer(numer.clone());
            if bytes.get(i) == Some(&b'/') && bytes.get(i + 1).is_some_and(|b| b.is_ascii_digit()) {
                let dstart = i + 1;
                i = dstart;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let denom: BigInt = src[dstart..i].parse().unwrap();
                if denom == BigInt::from(0) {
                    return Err(ParseError::Lex { offset: dstart, found: '0' });
                }
                value = BigRational::new(numer, denom);
            }
            out.push(Token { tok: Tok::Num(value), offset: start });
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(src[start..i].to_string()), offset: start });
            continue;
        }
        let found = src[start..].chars().next().unwrap();
        return Err(ParseError::Lex { offset: start, found });
    }
    Ok(out)
}
