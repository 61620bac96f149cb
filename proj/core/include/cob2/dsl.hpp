#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "cob2/cobordism.hpp"
#include "cob2/errors.hpp"

namespace cob2 {

/// 1-based position of a token in the source text; columns count code points.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ParseErrorKind { UnknownToken, ArityMismatch, EmptyLayer, BadRepetition };

std::string_view to_string(ParseErrorKind kind) noexcept;

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, SourceSpan span, std::string message);

  ParseErrorKind kind() const noexcept { return kind_; }
  const SourceSpan& span() const noexcept { return span_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ParseErrorKind kind_;
  SourceSpan span_;
  std::string message_;
};

/// Largest accepted repetition count in `gen^k`.
inline constexpr std::size_t kMaxRepetition = 4096;

/// Parses the word language:
///
///   word  := [layer (";" layer)*]
///   layer := gen ("|" gen)*
///   gen   := ("cap" | "cup" | "id" | "mu" | "delta" | "swap") ["^" natural]
///
/// "#" starts a comment running to end of line; whitespace (including CR)
/// is insignificant. Aliases: pants = delta, copants = mu, twist = swap,
/// cyl = id. Throws ParseError.
CobordismWord parse(std::string_view text);

/// Canonical text: " ; " between layers, " | " between generators, runs of
/// two or more cylinders as "id^k". A word with no layers on n > 0 circles
/// prints as its identity.
std::string format(const CobordismWord& w);

}  // namespace cob2
