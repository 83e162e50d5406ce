#include "kanform/words.hpp"

#include <cctype>

namespace kanform {

namespace {

void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back().gen == l.gen &&
      stack.back().exp == -l.exp) {
    stack.pop_back();
  } else {
    stack.push_back(std::move(l));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

void validate_generator_name(std::string_view name) {
  if (name.empty()) throw InputError("empty generator name");
  for (char c : name) {
    auto uc = static_cast<unsigned char>(c);
    if (uc > 127 || std::isspace(uc) || c == '*' || c == '^' ||
        std::string_view("|[](),").find(c) != std::string_view::npos || !std::isprint(uc))
      throw InputError("illegal generator name '" + std::string(name) + "'");
  }
  if (name == "1") throw InputError("'1' is reserved for the identity word");
}

Word Word::reduce(std::vector<Letter> letters) {
  Word w;
  w.letters_.reserve(letters.size());
  for (auto& l : letters) {
    if (l.exp != 1 && l.exp != -1)
      throw InputError("letter exponent must be +1 or -1");
    push_reduced(w.letters_, std::move(l));
  }
  return w;
}

Word Word::generator(std::string name, int exp) {
  validate_generator_name(name);
  return reduce({Letter{std::move(name), exp}});
}

Word Word::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw InputError("empty word text (use \"1\" for identity)");
  if (text == "1") return {};
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t star = text.find('*', pos);
    std::string_view token =
        trim(text.substr(pos, star == std::string_view::npos ? std::string_view::npos
                                                             : star - pos));
    if (token.empty())
      throw InputError("empty token in word '" + std::string(text) + "'");
    int exp = 1;
    std::size_t caret = token.find('^');
    std::string_view name = token;
    if (caret != std::string_view::npos) {
      std::string_view power = token.substr(caret + 1);
      if (power != "-1")
        throw InputError("bad token '" + std::string(token) +
                         "' (only ^-1 is allowed)");
      exp = -1;
      name = token.substr(0, caret);
    }
    try {
      validate_generator_name(name);
    } catch (const InputError&) {
      throw InputError("bad token '" + std::string(token) + "'");
    }
    letters.push_back({std::string(name), exp});
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return reduce(std::move(letters));
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->gen, -it->exp});
  return w;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '*';
    out += letters_[i].gen;
    if (letters_[i].exp < 0) out += "^-1";
  }
  return out;
}

Word& Word::operator*=(const Word& b) {
  for (const auto& l : b.letters_) push_reduced(letters_, l);
  return *this;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  w *= b;
  return w;
}

Word reduce_checked(std::vector<Letter> letters,
                    const std::function<bool(std::string_view)>& known) {
  for (const auto& l : letters)
    if (!known(l.gen)) throw InputError("unknown generator '" + l.gen + "'");
  return Word::reduce(std::move(letters));
}

ExponentVector exponent_sums(const Word& w) {
  ExponentVector v;
  for (const auto& l : w.letters()) {
    long& e = v[l.gen];
    e += l.exp;
    if (e == 0) v.erase(l.gen);
  }
  return v;
}

ExponentVector& operator+=(ExponentVector& a, const ExponentVector& b) {
  for (const auto& [g, e] : b) {
    long& x = a[g];
    x += e;
    if (x == 0) a.erase(g);
  }
  return a;
}

ExponentVector scaled(const ExponentVector& a, long factor) {
  ExponentVector out;
  if (factor == 0) return out;
  for (const auto& [g, e] : a) out[g] = e * factor;
  return out;
}

Word substitute(const Word& w,
                const std::function<Word(const std::string&)>& image) {
  Word out;
  for (const auto& l : w.letters()) {
    Word img = image(l.gen);
    out *= (l.exp > 0 ? img : img.inverse());
  }
  return out;
}

}  // namespace kanform
