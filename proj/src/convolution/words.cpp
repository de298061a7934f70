// Free words and the braid automorphisms acting on them.

#include <cctype>
#include <sstream>

#include "mctool/convolution.hpp"

namespace mctool {

FreeWord::FreeWord(const std::vector<Letter>& letters) {
  for (const auto& l : letters) push(l);
}

void FreeWord::push(Letter l) {
  if (l.gen == 0 || (l.exp != 1 && l.exp != -1)) throw Error(ErrorKind::IndexOutOfRange, "bad letter");
  if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

FreeWord FreeWord::generator(std::size_t k) { return FreeWord({Letter{k, 1}}); }

FreeWord FreeWord::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  FreeWord w;
  while (in >> tok) {
    if (tok == "1") continue;
    std::size_t pos = 0;
    if (tok[pos++] != 'a') throw Error(ErrorKind::ParseError, "word token '" + tok + "'");
    std::size_t start = pos;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos == start) throw Error(ErrorKind::ParseError, "word token '" + tok + "'");
    const std::size_t gen = std::stoul(tok.substr(start, pos - start));
    int exp = 1;
    if (pos < tok.size()) {
      const std::string suffix = tok.substr(pos);
      if (suffix == "^-1") {
        exp = -1;
      } else if (suffix != "^1") {
        throw Error(ErrorKind::ParseError, "word token '" + tok + "'");
      }
    }
    if (gen == 0) throw Error(ErrorKind::ParseError, "generators are numbered from 1");
    w.push({gen, exp});
  }
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push({it->gen, -it->exp});
  return w;
}

FreeWord FreeWord::conjugate_by(const FreeWord& b) const { return b.inverse() * *this * b; }

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord w = a;
  for (const auto& l : b.letters_) w.push(l);
  return w;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += 'a' + std::to_string(l.gen);
    if (l.exp == -1) out += "^-1";
  }
  return out;
}

FreeWord commutator(const FreeWord& a, const FreeWord& b) { return a.inverse() * b.inverse() * a * b; }

FreeWord BraidAuto::apply(const FreeWord& w) const {
  FreeWord out;
  for (const auto& l : w.letters()) {
    if (l.gen > images.size()) throw Error(ErrorKind::IndexOutOfRange, "generator outside the automorphism");
    const FreeWord& img = images[l.gen - 1];
    out = out * (l.exp == 1 ? img : img.inverse());
  }
  return out;
}

BraidAuto braid_auto(std::size_t p, std::size_t q, std::size_t i, std::size_t j) {
  if (i < 1 || i > p || j < 1 || j > q) {
    throw Error(ErrorKind::IndexOutOfRange, "braid_auto(" + std::to_string(p) + ", " + std::to_string(q) + ", " +
                                                std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  BraidAuto b{p, q, i, j, {}};
  const FreeWord ai = FreeWord::generator(i);
  const FreeWord g = FreeWord::generator(p + j);
  const FreeWord c = commutator(ai, g);
  for (std::size_t k = 1; k <= p + q; ++k) {
    const FreeWord ak = FreeWord::generator(k);
    if (k < i || k > p + j) {
      b.images.push_back(ak);
    } else if (k == i) {
      b.images.push_back(ak.conjugate_by(g));
    } else if (k < p + j) {
      b.images.push_back(ak.conjugate_by(c));
    } else {
      b.images.push_back(g.conjugate_by(ai * g));
    }
  }
  return b;
}

}  // namespace mctool
