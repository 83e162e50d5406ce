#pragma once

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kanform {

/// Raised for malformed input: bad word syntax, unknown generators,
/// schema violations.  The CLI maps it to exit code 3.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One signed occurrence of a free generator.
struct Letter {
  std::string gen;
  int exp = 1;  // +1 or -1

  auto operator<=>(const Letter&) const = default;
};

/// Element of a free group, always stored freely reduced.
///
/// Text syntax: letters joined by "*", inverses written "g^-1", the empty
/// word written "1".  Example: "x1*y1*x1^-1*y1^-1".
class Word {
 public:
  Word() = default;

  /// Freely reduces an arbitrary letter list (stack reduction).
  static Word reduce(std::vector<Letter> letters);
  static Word generator(std::string name, int exp = 1);
  /// Parses the text syntax.  Throws InputError naming the offending token.
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const;
  std::string str() const;

  friend Word operator*(const Word& a, const Word& b);
  Word& operator*=(const Word& b);

  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Reduction that also rejects generator names the caller does not know.
Word reduce_checked(std::vector<Letter> letters,
                    const std::function<bool(std::string_view)>& known);

/// Abelianization: generator -> total exponent.  Zero entries are omitted.
using ExponentVector = std::map<std::string, long>;

ExponentVector exponent_sums(const Word& w);
ExponentVector& operator+=(ExponentVector& a, const ExponentVector& b);
ExponentVector scaled(const ExponentVector& a, long factor);

/// Throws InputError unless `name` is a legal generator name.
void validate_generator_name(std::string_view name);

/// Word with every generator renamed by `rename` (letters re-reduced).
Word substitute(const Word& w,
                const std::function<Word(const std::string&)>& image);

}  // namespace kanform
