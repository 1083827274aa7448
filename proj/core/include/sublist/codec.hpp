#pragma once

// Text codec for trees. The grammar is fixed and no whitespace is emitted or
// accepted:
//
//   tree    ::= 'Z(' payload ')' | 'S(' payload ')' | 'B(' tree ',' tree ')'
//   payload ::= '*'                          unit
//             | decimal integer              optional leading '-'
//             | '"' chars '"'                backslash escapes '"' and '\'
//             | '[' ']' | '[' payload (',' payload)* ']'
//             | tree                         nested table
//
// PayloadCodec<P> supplies the payload rule for a C++ type. Specializations
// exist for Unit, integers, std::string, std::vector<T> and Tree<T>; callers
// can also pass their own encoder/decoder callables.

#include <charconv>
#include <concepts>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sublist/error.hpp"
#include "sublist/tree.hpp"

namespace sublist {

/// Read position over codec text.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  bool at_end() const noexcept { return pos_ >= text_.size(); }
  std::size_t position() const noexcept { return pos_; }
  std::string_view rest() const noexcept { return text_.substr(pos_); }

  char peek() const {
    if (at_end()) fail("unexpected end of input");
    return text_[pos_];
  }
  char next() {
    char c = peek();
    ++pos_;
    return c;
  }
  bool consume(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (at_end()) fail(std::string("expected '") + c + "', found end of input");
    if (text_[pos_] != c)
      fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    ++pos_;
  }
  void advance(std::size_t count) { pos_ += count; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class P>
struct PayloadCodec;

template <>
struct PayloadCodec<Unit> {
  static void encode(const Unit&, std::string& out) { out += '*'; }
  static Unit decode(TextCursor& in) {
    in.expect('*');
    return {};
  }
};

template <class I>
  requires(std::integral<I> && !std::same_as<I, bool>)
struct PayloadCodec<I> {
  static void encode(I value, std::string& out) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    out.append(buf, end);
  }
  static I decode(TextCursor& in) {
    std::string_view rest = in.rest();
    I value{};
    auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec == std::errc::result_out_of_range) in.fail("integer out of range");
    if (ec != std::errc() || end == rest.data()) in.fail("expected integer");
    in.advance(static_cast<std::size_t>(end - rest.data()));
    return value;
  }
};

template <>
struct PayloadCodec<std::string> {
  static void encode(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += '"';
  }
  static std::string decode(TextCursor& in) {
    in.expect('"');
    std::string s;
    while (true) {
      if (in.at_end()) in.fail("unterminated string");
      char c = in.next();
      if (c == '"') return s;
      if (c == '\\') {
        if (in.at_end()) in.fail("unterminated escape");
        char e = in.peek();
        if (e != '"' && e != '\\') in.fail("invalid escape");
        in.advance(1);
        s += e;
      } else {
        s += c;
      }
    }
  }
};

template <class T>
struct PayloadCodec<std::vector<T>> {
  static void encode(const std::vector<T>& xs, std::string& out) {
    out += '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ',';
      PayloadCodec<T>::encode(xs[i], out);
    }
    out += ']';
  }
  static std::vector<T> decode(TextCursor& in) {
    in.expect('[');
    std::vector<T> xs;
    if (in.consume(']')) return xs;
    do {
      xs.push_back(PayloadCodec<T>::decode(in));
    } while (in.consume(','));
    in.expect(']');
    return xs;
  }
};

namespace detail {

template <class P, class Enc>
void encode_tree(const Tree<P>& t, Enc& enc, std::string& out) {
  switch (t.variant()) {
    case Variant::TipZ:
    case Variant::TipS:
      out += t.variant() == Variant::TipZ ? "Z(" : "S(";
      enc(t.payload(), out);
      out += ')';
      return;
    case Variant::Bin:
      out += "B(";
      encode_tree(t.left(), enc, out);
      out += ',';
      encode_tree(t.right(), enc, out);
      out += ')';
      return;
  }
}

template <class P, class Dec>
Tree<P> decode_tree(TextCursor& in, Dec& dec) {
  std::size_t start = in.position();
  char tag = in.at_end() ? '\0' : in.peek();
  if (tag != 'Z' && tag != 'S' && tag != 'B') {
    throw ParseError("expected tree constructor 'Z', 'S' or 'B'", start);
  }
  in.advance(1);
  in.expect('(');
  if (tag == 'B') {
    Tree<P> l = decode_tree<P>(in, dec);
    in.expect(',');
    Tree<P> r = decode_tree<P>(in, dec);
    in.expect(')');
    return Tree<P>::bin(std::move(l), std::move(r));
  }
  P payload = dec(in);
  in.expect(')');
  return tag == 'Z' ? Tree<P>::tip_z(std::move(payload)) : Tree<P>::tip_s(std::move(payload));
}

}  // namespace detail

template <class P>
struct PayloadCodec<Tree<P>> {
  static void encode(const Tree<P>& t, std::string& out) {
    auto enc = [](const P& p, std::string& o) { PayloadCodec<P>::encode(p, o); };
    detail::encode_tree(t, enc, out);
  }
  static Tree<P> decode(TextCursor& in) {
    auto dec = [](TextCursor& c) { return PayloadCodec<P>::decode(c); };
    return detail::decode_tree<P>(in, dec);
  }
};

/// Encodes with a caller-supplied payload encoder `enc(const P&, std::string&)`.
template <class P, class Enc>
std::string encode(const Tree<P>& t, Enc&& enc) {
  std::string out;
  detail::encode_tree(t, enc, out);
  return out;
}

template <class P>
std::string encode(const Tree<P>& t) {
  std::string out;
  PayloadCodec<Tree<P>>::encode(t, out);
  return out;
}

/// Decodes with a caller-supplied payload decoder `dec(TextCursor&) -> P`.
/// The whole text must be consumed.
template <class P, class Dec>
Tree<P> decode(std::string_view text, Dec&& dec) {
  TextCursor in(text);
  Tree<P> t = detail::decode_tree<P>(in, dec);
  if (!in.at_end()) in.fail("trailing characters after tree");
  return t;
}

template <class P>
Tree<P> decode(std::string_view text) {
  return decode<P>(text, [](TextCursor& c) { return PayloadCodec<P>::decode(c); });
}

/// Encodes a single payload value with its default codec.
template <class P>
std::string encode_payload(const P& value) {
  std::string out;
  PayloadCodec<P>::encode(value, out);
  return out;
}

}  // namespace sublist
