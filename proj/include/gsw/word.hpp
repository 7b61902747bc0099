#ifndef GSW_WORD_HPP
#define GSW_WORD_HPP

#include <string>
#include <utility>
#include <vector>

namespace gsw {

/* A freely reduced word in free-group generators: adjacent letters have
 * distinct generator indices, exponents are nonzero. The empty word is the
 * identity. */
struct GroupWord {
  std::vector<std::pair<int, long long>> letters;  // (generator index, exponent)

  bool is_identity() const { return letters.empty(); }
  long long length() const;  // sum of |exponents|
  bool operator==(const GroupWord&) const = default;
};

/* Free reduction: merges adjacent equal-generator letters, drops zero
 * exponents. Idempotent. */
GroupWord reduce(const GroupWord& w);

GroupWord inverse(const GroupWord& w);
GroupWord concat(const GroupWord& a, const GroupWord& b);  // reduced product
GroupWord word_pow(const GroupWord& w, long long e);
/* [u,v] = u^-1 v^-1 u v */
GroupWord commutator(const GroupWord& u, const GroupWord& v);

/* Grammar:  word := term+ ; term := atom ('^' signed-int)? ;
 *           atom := name | '(' word ')' | '[' word ',' word ']'
 * Juxtaposition is product; brackets expand to u^-1 v^-1 u v at parse time.
 * Unknown names and malformed syntax raise input_error. */
GroupWord parse_word(const std::string& text,
                     const std::vector<std::string>& generator_names);

/* Inverse of parse_word up to free reduction: "x y^-1 x^2" style. The
 * identity renders as the empty string, which parse_word accepts back. */
std::string format_word(const GroupWord& w,
                        const std::vector<std::string>& generator_names);

}  // namespace gsw

#endif
