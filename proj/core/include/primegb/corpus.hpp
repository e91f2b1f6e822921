#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "primegb/system.hpp"

namespace primegb {

/// Parses a polynomial system, one polynomial per line:
///
///     line   = term (('+' | '-') term)*
///     term   = [sign] [coefficient] factor*
///     coeff  = digits ['/' digits]
///     factor = letter ['^' digits]
///
/// Whitespace between tokens is ignored, adjacent factors multiply, and
/// lines whose first non-blank character is '#' are comments. Variables are
/// indexed by `declared_order`; when it is empty, by first appearance.
///
/// Throws ParseError (with 1-based line/column) or UnknownVariable.
PolySystem parse_system(std::string_view text, std::string_view declared_order = {}, std::string name = {});

/// One built-in system.
struct CorpusEntry {
  std::string_view id;             ///< e.g. "gerdt-1"
  std::string_view title;          ///< e.g. "Gerdt 1"
  std::string_view default_order;  ///< variable order for the reference configuration
  std::string_view text;           ///< file contents
};

/// The thirteen built-in systems, in table order.
std::span<const CorpusEntry> corpus();

/// Looks a system up by id or title; throws UnknownSystem.
const CorpusEntry& corpus_entry(std::string_view name);

/// The named built-in system with its default variable order.
PolySystem builtin(std::string_view name);

/// Checksum manifest shipped with the corpus ("<fnv1a64 hex>  <file>").
std::string_view corpus_manifest();

/// 64-bit FNV-1a, the manifest's checksum.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace primegb
