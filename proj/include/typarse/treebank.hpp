#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "typarse/schema.hpp"

namespace typarse {

// One delexicalized token: 1-based position, POS tag id, head position
// (0 = artificial ROOT) and relation label id. Ids index into a CorpusSchema.
struct Token {
  int index = 0;
  int upos = -1;
  int head = -1;
  int deprel = -1;
};

struct Sentence {
  std::vector<Token> tokens;
  // Original CoNLL-U columns, only kept when ConlluOptions::keep_raw is set.
  std::vector<std::vector<std::string>> raw_columns;

  int length() const { return static_cast<int>(tokens.size()); }
};

struct Treebank {
  std::string language;
  std::vector<Sentence> sentences;

  std::int64_t token_count() const;
  bool empty() const { return sentences.empty(); }
};

struct ConlluOptions {
  bool keep_raw = false;         // retain all 10 columns for round-trip output
  bool strip_subtypes = true;    // "acl:relcl" -> "acl"
  bool strict = false;           // invalid sentences throw instead of warn+drop
};

// True iff heads form a directed tree rooted at 0 covering every token.
bool is_tree(const Sentence& s);

// CoNLL-U reader. Comment lines and multiword/empty-node id lines are
// skipped; blank lines separate sentences; only index/upos/head/deprel are
// retained. Structurally malformed lines throw ParseError. Sentences that
// violate the tree invariant or use labels outside the schema are dropped
// with a warning (or throw under options.strict).
Treebank parse_conllu(std::istream& in, const CorpusSchema& schema, const std::string& language,
                      const ConlluOptions& options = {}, std::vector<std::string>* warnings = nullptr);
Treebank parse_conllu_text(const std::string& text, const CorpusSchema& schema, const std::string& language,
                           const ConlluOptions& options = {}, std::vector<std::string>* warnings = nullptr);
Treebank load_conllu_file(const std::string& path, const CorpusSchema& schema, const std::string& language,
                          const ConlluOptions& options = {}, std::vector<std::string>* warnings = nullptr);

// Emits 10-column CoNLL-U. Raw columns are reproduced when present, with the
// retained fields (index/upos/head/deprel) authoritative.
void serialize_conllu(const Treebank& t, const CorpusSchema& schema, std::ostream& out);
std::string serialize_conllu_text(const Treebank& t, const CorpusSchema& schema);
void save_conllu_file(const Treebank& t, const CorpusSchema& schema, const std::string& path);

// Longest sentence prefix whose total token count stays within max_tokens.
// Never splits a sentence; emits a warning when even the first sentence
// does not fit.
Treebank truncate(const Treebank& t, std::int64_t max_tokens = 500000,
                  std::vector<std::string>* warnings = nullptr);

// Positional mirror of a treebank: token order reversed, every arc direction
// flipped, tags and labels carried along. Used by directionality tests.
Treebank mirror_treebank(const Treebank& t);

// Two synthetic treebanks with identical POS sequences but mirrored
// attachment: language "ma" is strictly head-final (token i attaches to
// i+1, the last token to ROOT), "mb" is strictly head-initial. Sentence
// lengths are uniform in [2, max_len]; relation labels are a fixed function
// of the dependent's tag. Deterministic in the seed.
std::pair<Treebank, Treebank> synth_mirror_pair(int n_sentences, int max_len, std::uint64_t seed,
                                                const CorpusSchema& schema);

}  // namespace typarse
