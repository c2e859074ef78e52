// Copyright 2026 The covscreen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace covscreen {

struct Article {
  std::string id;
  std::string title;
  std::string abstract;
  std::string journal;

  friend bool operator==(const Article&, const Article&) = default;
};

// Immutable, order-preserving collection of articles with unique ids.
class Corpus {
 public:
  Corpus() = default;
  // Throws ValidationError on an empty or duplicate id.
  explicit Corpus(std::vector<Article> articles);

  const std::vector<Article>& articles() const { return articles_; }
  const Article* Find(std::string_view id) const;
  bool Contains(std::string_view id) const { return Find(id) != nullptr; }
  std::size_t size() const { return articles_.size(); }
  bool empty() const { return articles_.empty(); }

  friend bool operator==(const Corpus& a, const Corpus& b) {
    return a.articles_ == b.articles_;
  }

 private:
  std::vector<Article> articles_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class MetadataFormat {
  kNative,  // id,title,abstract,journal
  kCord19,  // CORD-19 metadata.csv: cord_uid,title,abstract,journal (+ others)
};

struct IngestResult {
  Corpus corpus;
  std::size_t rows = 0;
  std::size_t dropped = 0;
};

// Keeps rows whose title, abstract and journal are all non-blank, in source
// order. Columns are located by header name; extra columns are ignored.
// Field-count mismatches and blank ids throw ParseError with the line
// number; a repeated id throws ValidationError naming it.
IngestResult IngestMetadata(std::string_view csv_text, MetadataFormat format,
                            std::string_view source = "<metadata>");
IngestResult IngestMetadataFile(const std::string& path, MetadataFormat format);

// Native-format CSV; IngestMetadata(WriteMetadataCsv(c)) == c.
std::string WriteMetadataCsv(const Corpus& corpus);

// Trimmed title, abstract and journal joined by single spaces. Throws
// ValidationError if a field is blank.
std::string ComposeText(const Article& a);

// Trimmed title and abstract joined by a single space (micro-scorer input).
std::string TitleAbstractText(const Article& a);

// Corpus artifact: "CVSCORP\0", u32 version, u64 count, then four
// u32-length-prefixed UTF-8 strings per article. Little-endian.
inline constexpr std::string_view kCorpusMagic{"CVSCORP\0", 8};
inline constexpr std::uint32_t kCorpusVersion = 1;

std::string SerializeCorpus(const Corpus& corpus);
Corpus DeserializeCorpus(std::string_view bytes, std::string_view source);

void SaveCorpus(const Corpus& corpus, const std::string& path);
// Reads an artifact, or falls back to native-format CSV when the magic is
// absent.
Corpus LoadCorpus(const std::string& path);

}  // namespace covscreen
