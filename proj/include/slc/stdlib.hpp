#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "slc/metrics.hpp"
#include "slc/module.hpp"
#include "slc/reduction.hpp"

namespace slc {

/// Host letters 0 < 1 < 2 standing for c0, c1, c2.
using Letter = std::uint8_t;

/// \s.\x. let s be !s' in (s' (s' ... x)) with n occurrences of s'.
TermPtr numeral(std::uint64_t n);
/// The same with binder annotations and a gen marker, checkable at N.
TermPtr numeral_typed(std::uint64_t n);

/// c0 = inl(()), c1 = inr(inl(())), c2 = inr(inr(())).
TermPtr encode_letter(Letter c);
/// Throws NotAListValue.
Letter decode_letter(const TermPtr& t);

/// [a, b] -> inr(<a, inr(<b, inl(())>)>), first element outermost.
TermPtr encode_list(const std::vector<TermPtr>& xs);
TermPtr encode_list(const std::vector<Letter>& xs);
/// Inverse of encode_list on normal forms. Throws NotAListValue.
std::vector<TermPtr> decode_list(const TermPtr& t);
std::vector<Letter> decode_letters(const TermPtr& t);

/// n[a] = \s.\x. <a, let s be !s' in (s' ... (s' x))>.
TermPtr encode_counted(std::uint64_t n, const TermPtr& payload);

struct Counted {
  std::uint64_t n = 0;
  TermPtr payload;
};

/// Applies `t` to `!c` and `z` for fresh c, z, normalizes and reads
/// <a, (c (c ... z))>. Throws NotACountedValue.
Counted decode_counted(const TermPtr& t);

/// Directory holding stdlib.slc and stdlib.typed.slc: $SLC_STDLIB when set,
/// otherwise the directory configured at build time.
std::filesystem::path stdlib_dir();

struct Stdlib {
  SourceModule typed;  // stdlib.typed.slc
  SourceModule bare;   // stdlib.slc
  Environment env;     // bare definitions, resolved
};

/// Parses both files from `dir`. Throws SyntaxError, std::runtime_error.
Stdlib load_stdlib(const std::filesystem::path& dir);
/// Loaded once from stdlib_dir().
const Stdlib& stdlib();
const Environment& stdlib_env();

/// Source text of `m` with markers and annotations erased, one definition
/// per line. This is how stdlib.slc is produced from stdlib.typed.slc.
std::string render_erased(const SourceModule& m);

struct DemoOptions {
  bool monitor = false;
  Strategy strategy;
};

struct DemoRun {
  std::vector<Letter> input;
  std::vector<Letter> output;
  std::uint64_t slack = 0;
  TermPtr program;  // the closed term that was normalized
  Trace trace;      // intermediate terms dropped
  Certificate certificate;
};

/// sort applied to !(slack[xs]), normalized and decoded. Requires
/// slack >= xs.size(). Throws StepCapExceeded, MonitorViolation and decode
/// errors.
DemoRun run_sort(const std::vector<Letter>& xs, std::uint64_t slack, const DemoOptions& options = {});

enum class MapFn { Id, Succ };

std::optional<MapFn> map_fn_from_string(const std::string& s);

/// map applied to !f and slack[xs]; the result comes out reversed.
DemoRun run_map(MapFn f, const std::vector<Letter>& xs, std::uint64_t slack, const DemoOptions& options = {});

}  // namespace slc
