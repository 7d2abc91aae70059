#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace typarse {

// An ordered, closed label inventory loaded from a file with one label per line.
class LabelSet {
 public:
  LabelSet() = default;
  explicit LabelSet(std::vector<std::string> labels);

  static LabelSet from_file(const std::string& path);
  static LabelSet from_stream(std::istream& in);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& name(int id) const { return labels_.at(id); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::optional<int> find(const std::string& label) const;
  // Throws SchemaError when the label is not in the inventory.
  int id(const std::string& label) const;
  bool contains(const std::string& label) const { return find(label).has_value(); }

  // FNV-1a over the ordered labels; used to pin checkpoints to an inventory.
  std::uint64_t hash() const;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
};

// POS and dependency-relation inventories of a corpus.
struct CorpusSchema {
  LabelSet upos;
  LabelSet deprel;

  static CorpusSchema from_files(const std::string& upos_path, const std::string& deprel_path);
};

}  // namespace typarse
