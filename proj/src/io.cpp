#include "degenlab/io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace degenlab {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Prefix = ">>graph6<<";

std::string_view first_line(std::string_view text) {
  const auto end = text.find_first_of("\r\n");
  return end == std::string_view::npos ? text : text.substr(0, end);
}

std::size_t body_length(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}

struct Header {
  int order;
  std::size_t width;
};

// Header of a record with any ">>graph6<<" prefix already removed.
std::optional<Header> read_header(std::string_view rec) {
  if (rec.empty()) return std::nullopt;
  const int b0 = static_cast<unsigned char>(rec[0]);
  if (b0 < kBias || b0 > 126) return std::nullopt;
  if (b0 < 126) return Header{b0 - kBias, 1};
  if (rec.size() < 4) return std::nullopt;
  int n = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    const int b = static_cast<unsigned char>(rec[i]);
    if (b < kBias || b > 126) return std::nullopt;
    n = (n << 6) | (b - kBias);
  }
  return Header{n, 4};
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Prefix)) base = kGraph6Prefix.size();
  const std::string_view rec = first_line(text.substr(base));
  if (rec.empty()) throw MalformedInput(base, "empty graph6 record");

  const int b0 = static_cast<unsigned char>(rec[0]);
  if (b0 < kBias || b0 > 126) {
    throw MalformedInput(base, "invalid graph6 header byte");
  }
  if (b0 == 126 && rec.size() > 1 && rec[1] == 126) {
    throw Error(ErrorKind::size_limit, "graph6 order exceeds 64");
  }
  const auto header = read_header(rec);
  if (!header) throw MalformedInput(base, "truncated graph6 header");
  const int n = header->order;
  if (n < 1 || n > kMaxOrder) {
    throw Error(ErrorKind::size_limit,
                "graph6 order " + std::to_string(n) + " outside [1, 64]");
  }

  const std::string_view body = rec.substr(header->width);
  const std::size_t expected = body_length(n);
  for (std::size_t i = 0; i < body.size(); ++i) {
    const int b = static_cast<unsigned char>(body[i]);
    if (b < kBias || b > 126) {
      throw MalformedInput(base + header->width + i, "invalid graph6 byte");
    }
  }
  if (body.size() != expected) {
    throw MalformedInput(base + header->width + std::min(body.size(), expected),
                         "graph6 body has " + std::to_string(body.size()) +
                             " bytes, expected " + std::to_string(expected));
  }

  Graph g(n);
  std::size_t pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++pos) {
      const int group = static_cast<unsigned char>(body[pos / 6]) - kBias;
      if ((group >> (5 - pos % 6)) & 1) g.add_edge(i, j);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kBias + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(kBias + ((n >> 12) & 0x3f)));
    out.push_back(static_cast<char>(kBias + ((n >> 6) & 0x3f)));
    out.push_back(static_cast<char>(kBias + (n & 0x3f)));
  }
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (group << (6 - filled))));
  return out;
}

namespace {

// Whitespace tokenizer that remembers byte offsets for diagnostics.
class Tokens {
 public:
  explicit Tokens(std::string_view text) : text_(text) {}

  std::optional<std::pair<long, std::size_t>> next_int() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
    if (pos_ >= text_.size()) return std::nullopt;
    const std::size_t start = pos_;
    long value = 0;
    const auto [ptr, ec] =
        std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    const std::size_t consumed = static_cast<std::size_t>(ptr - (text_.data() + pos_));
    if (ec != std::errc{} || consumed == 0 ||
        (pos_ + consumed < text_.size() &&
         !std::isspace(static_cast<unsigned char>(text_[pos_ + consumed])))) {
      throw MalformedInput(start, "expected an integer");
    }
    pos_ += consumed;
    return std::make_pair(value, start);
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Tokens tokens(text);
  const auto n = tokens.next_int();
  if (!n) throw MalformedInput(0, "missing \"n m\" header");
  const auto m = tokens.next_int();
  if (!m) throw MalformedInput(tokens.pos(), "missing edge count");
  if (n->first < 1 || n->first > kMaxOrder) {
    throw Error(ErrorKind::size_limit,
                "edge-list order " + std::to_string(n->first) + " outside [1, 64]");
  }
  const int order = static_cast<int>(n->first);
  if (m->first < 0 || m->first > static_cast<long>(order) * (order - 1) / 2) {
    throw MalformedInput(m->second, "edge count out of range");
  }
  Graph g(order);
  for (long e = 0; e < m->first; ++e) {
    const auto u = tokens.next_int();
    const auto v = tokens.next_int();
    if (!u || !v) throw MalformedInput(tokens.pos(), "fewer edges than declared");
    for (const auto& end : {*u, *v}) {
      if (end.first < 1 || end.first > order) {
        throw MalformedInput(end.second, "vertex out of range");
      }
    }
    if (u->first == v->first) throw MalformedInput(v->second, "loop");
    if (g.adjacent(static_cast<int>(u->first - 1), static_cast<int>(v->first - 1))) {
      throw MalformedInput(u->second, "duplicate edge");
    }
    g.add_edge(static_cast<int>(u->first - 1), static_cast<int>(v->first - 1));
  }
  if (const auto extra = tokens.next_int()) {
    throw MalformedInput(extra->second, "more edges than declared");
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v + 1 << ";\n";
  for (const auto& [u, v] : g.edges())
    out << "  " << u + 1 << " -- " << v + 1 << ";\n";
  out << "}\n";
  return out.str();
}

bool looks_like_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Prefix)) text.remove_prefix(kGraph6Prefix.size());
  const std::string_view rec = first_line(text);
  const auto header = read_header(rec);
  if (!header || header->order < 1) return false;
  return rec.size() == header->width + body_length(header->order);
}

Graph parse_graph(std::string_view text) {
  std::size_t skip = 0;
  while (skip < text.size() &&
         std::isspace(static_cast<unsigned char>(text[skip])))
    ++skip;
  const std::string_view trimmed = text.substr(skip);
  if (looks_like_graph6(trimmed)) return parse_graph6(trimmed);
  return parse_edge_list(text);
}

}  // namespace degenlab
