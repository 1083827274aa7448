#pragma once

// ASCII drawing of trees. A tip is drawn as its payload. A Bin node is drawn
// as a dot with its left subtree continuing on the same row and its right
// subtree below it:
//
//   Bin(Bin(S("cd"),Z("bc")),Z("ab"))    . . cd
//                                        | '-bc
//                                        '-ab

#include <string>
#include <vector>

#include "sublist/codec.hpp"
#include "sublist/tree.hpp"

namespace sublist {

namespace detail {

template <class P, class R>
std::vector<std::string> render_rows(const Tree<P>& t, R& renderer) {
  if (t.is_tip()) return {std::string(renderer(t.payload()))};
  std::vector<std::string> left = render_rows(t.left(), renderer);
  std::vector<std::string> right = render_rows(t.right(), renderer);
  std::vector<std::string> rows;
  rows.reserve(left.size() + right.size());
  rows.push_back(". " + left.front());
  for (std::size_t i = 1; i < left.size(); ++i) rows.push_back("| " + left[i]);
  rows.push_back("'-" + right.front());
  for (std::size_t i = 1; i < right.size(); ++i) rows.push_back("  " + right[i]);
  return rows;
}

}  // namespace detail

/// Renders `t` using `renderer(const P&) -> std::string` for payloads. Every
/// row, including the last, ends in '\n'.
template <class P, class R>
std::string render_ascii(const Tree<P>& t, R&& renderer) {
  std::string out;
  for (const auto& row : detail::render_rows(t, renderer)) {
    out += row;
    out += '\n';
  }
  return out;
}

/// Strings are drawn raw; everything else uses its codec text.
template <class P>
std::string render_ascii(const Tree<P>& t) {
  return render_ascii(t, [](const P& p) -> std::string {
    if constexpr (std::is_same_v<P, std::string>) {
      return p;
    } else {
      return encode_payload(p);
    }
  });
}

}  // namespace sublist
