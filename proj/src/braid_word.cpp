#include "qtbraid/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "qtbraid/error.hpp"

namespace qtb {

std::string BraidGenerator::text() const {
  std::string out;
  if (kind == Kind::HalfTwist) {
    out = "s" + std::to_string(i + 1);
  } else if (i < 9 && j < 9) {
    out = "a" + std::to_string(i + 1) + std::to_string(j + 1);
  } else {
    out = "a" + std::to_string(i + 1) + "," + std::to_string(j + 1);
  }
  if (inverse) out += "^-1";
  return out;
}

BraidWord BraidWord::inverse() const {
  BraidWord out{strands, {}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    BraidGenerator g = *it;
    g.inverse = !g.inverse;
    out.letters.push_back(g);
  }
  return out;
}

BraidWord BraidWord::operator*(const BraidWord& other) const {
  if (other.strands != strands) throw Error(ErrorCode::InvalidArgument, "words on different strand counts");
  BraidWord out = *this;
  out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
  return out;
}

std::string BraidWord::text() const {
  std::string out;
  for (const auto& g : letters) {
    if (!out.empty()) out += ' ';
    out += g.text();
  }
  return out;
}

std::vector<int> induced_permutation(const BraidWord& w) {
  std::vector<int> slots(static_cast<std::size_t>(w.strands));
  std::iota(slots.begin(), slots.end(), 0);
  for (const auto& g : w.letters) {
    if (g.kind == BraidGenerator::Kind::HalfTwist) {
      std::swap(slots[static_cast<std::size_t>(g.i)], slots[static_cast<std::size_t>(g.i + 1)]);
    }
  }
  return slots;
}

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, out);
  return res.ec == std::errc() && res.ptr == end;
}

BraidGenerator parse_token(std::string_view tok, std::size_t pos, int strands) {
  BraidGenerator g;
  std::string_view body = tok;
  constexpr std::string_view inv_suffix = "^-1";
  if (body.size() > inv_suffix.size() && body.substr(body.size() - inv_suffix.size()) == inv_suffix) {
    g.inverse = true;
    body.remove_suffix(inv_suffix.size());
  }
  if (body.size() < 2) throw ParseError(ErrorCode::SyntaxError, pos, "cannot read '" + std::string(tok) + "'");
  const char head = body.front();
  body.remove_prefix(1);
  auto syntax = [&]() {
    return ParseError(ErrorCode::SyntaxError, pos, "cannot read '" + std::string(tok) + "'");
  };
  if (head == 's') {
    int i = 0;
    if (!parse_int(body, i)) throw syntax();
    if (i < 1 || i >= strands) {
      throw ParseError(ErrorCode::IndexOutOfRange, pos, "s" + std::to_string(i) + " needs 1 <= i < r");
    }
    g.kind = BraidGenerator::Kind::HalfTwist;
    g.i = i - 1;
    g.j = i;
    return g;
  }
  if (head != 'a') throw syntax();
  int j = 0;
  int k = 0;
  const auto comma = body.find(',');
  if (comma != std::string_view::npos) {
    if (!parse_int(body.substr(0, comma), j) || !parse_int(body.substr(comma + 1), k)) throw syntax();
  } else {
    if (body.size() != 2 || !std::isdigit(static_cast<unsigned char>(body[0])) ||
        !std::isdigit(static_cast<unsigned char>(body[1]))) {
      throw syntax();
    }
    j = body[0] - '0';
    k = body[1] - '0';
  }
  if (j < 1 || k < 1 || j > strands || k > strands || j >= k) {
    throw ParseError(ErrorCode::IndexOutOfRange, pos,
                     "'" + std::string(tok) + "' needs 1 <= j < k <= " + std::to_string(strands));
  }
  g.kind = BraidGenerator::Kind::Pure;
  g.i = j - 1;
  g.j = k - 1;
  return g;
}

}  // namespace

BraidWord parse_braid_unchecked(std::string_view text, int strands) {
  if (strands < 3) throw Error(ErrorCode::InvalidArgument, "braids need at least 3 strands");
  BraidWord w{strands, {}};
  std::istringstream in{std::string(text)};
  std::string tok;
  std::size_t pos = 0;
  while (in >> tok) w.letters.push_back(parse_token(tok, ++pos, strands));
  return w;
}

BraidWord parse_braid(std::string_view text, int strands) {
  BraidWord w = parse_braid_unchecked(text, strands);
  const auto perm = induced_permutation(w);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (perm[s] != static_cast<int>(s)) {
      throw ParseError(ErrorCode::NotPure, w.letters.size(),
                       "word permutes the strands (strand " + std::to_string(perm[s] + 1) +
                           " ends in slot " + std::to_string(s + 1) + ")");
    }
  }
  return w;
}

BraidWord random_pure_word(int strands, int length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, strands - 1);
  std::bernoulli_distribution coin(0.5);
  BraidWord w{strands, {}};
  while (static_cast<int>(w.letters.size()) < length) {
    int j = pick(rng);
    int k = pick(rng);
    if (j == k) continue;
    if (j > k) std::swap(j, k);
    w.letters.push_back(BraidGenerator{BraidGenerator::Kind::Pure, j, k, coin(rng)});
  }
  return w;
}

}  // namespace qtb
