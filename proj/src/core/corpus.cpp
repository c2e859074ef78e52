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

#include "core/corpus.hpp"

#include <array>
#include <cstdint>
#include <optional>

#include "core/csv.hpp"
#include "core/error.hpp"
#include "core/io.hpp"

namespace covscreen {

Corpus::Corpus(std::vector<Article> articles) : articles_(std::move(articles)) {
  index_.reserve(articles_.size());
  for (std::size_t i = 0; i < articles_.size(); ++i) {
    const auto& id = articles_[i].id;
    if (id.empty()) throw ValidationError("article with empty id");
    if (!index_.emplace(id, i).second) {
      throw ValidationError("duplicate article id '" + id + "'");
    }
  }
}

const Article* Corpus::Find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &articles_[it->second];
}

namespace {

std::size_t FindColumn(const std::vector<std::string>& header,
                       std::string_view name, std::string_view source) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (io::Trim(header[i]) == name) return i;
  }
  throw ParseError(std::string(source) + ":1: missing column '" +
                   std::string(name) + "'");
}

}  // namespace

IngestResult IngestMetadata(std::string_view csv_text, MetadataFormat format,
                            std::string_view source) {
  IngestResult result;
  auto records = csv::Parse(csv_text, source);
  if (records.empty()) return result;

  const auto& header = records.front().fields;
  const std::string_view id_name =
      format == MetadataFormat::kCord19 ? "cord_uid" : "id";
  const std::array<std::size_t, 4> cols = {
      FindColumn(header, id_name, source), FindColumn(header, "title", source),
      FindColumn(header, "abstract", source),
      FindColumn(header, "journal", source)};

  std::vector<Article> kept;
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string where =
        std::string(source) + ":" + std::to_string(rec.line);
    if (rec.fields.size() != header.size()) {
      throw ParseError(where + ": expected " + std::to_string(header.size()) +
                       " fields, found " + std::to_string(rec.fields.size()));
    }
    ++result.rows;
    std::string id(io::Trim(rec.fields[cols[0]]));
    if (id.empty()) throw ParseError(where + ": empty id");
    if (auto [it, inserted] = seen.emplace(id, rec.line); !inserted) {
      throw ValidationError(where + ": duplicate id '" + id +
                            "' (first seen on line " +
                            std::to_string(it->second) + ")");
    }
    Article a{std::move(id), rec.fields[cols[1]], rec.fields[cols[2]],
              rec.fields[cols[3]]};
    if (io::Trim(a.title).empty() || io::Trim(a.abstract).empty() ||
        io::Trim(a.journal).empty()) {
      ++result.dropped;
      continue;
    }
    kept.push_back(std::move(a));
  }
  result.corpus = Corpus(std::move(kept));
  return result;
}

IngestResult IngestMetadataFile(const std::string& path, MetadataFormat format) {
  return IngestMetadata(io::ReadFile(path), format, path);
}

std::string WriteMetadataCsv(const Corpus& corpus) {
  std::string out = "id,title,abstract,journal\n";
  for (const auto& a : corpus.articles()) {
    out += csv::Escape(a.id) + ',' + csv::Escape(a.title) + ',' +
           csv::Escape(a.abstract) + ',' + csv::Escape(a.journal) + '\n';
  }
  return out;
}

namespace {

std::string JoinTrimmed(std::initializer_list<std::string_view> parts,
                        std::string_view id) {
  std::string out;
  for (auto p : parts) {
    auto t = io::Trim(p);
    if (t.empty()) {
      throw ValidationError("article '" + std::string(id) +
                            "' has a blank text field");
    }
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

void PutU32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out += static_cast<char>((v >> (8 * i)) & 0xFF);
}

void PutU64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out += static_cast<char>((v >> (8 * i)) & 0xFF);
}

class Reader {
 public:
  Reader(std::string_view bytes, std::string_view source)
      : bytes_(bytes), source_(source) {}

  std::uint64_t Uint(int width) {
    Need(width);
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i]))
           << (8 * i);
    }
    pos_ += width;
    return v;
  }

  std::string String() {
    const auto len = static_cast<std::size_t>(Uint(4));
    Need(len);
    std::string s(bytes_.substr(pos_, len));
    pos_ += len;
    return s;
  }

  bool AtEnd() const { return pos_ == bytes_.size(); }

 private:
  void Need(std::size_t n) const {
    if (bytes_.size() - pos_ < n) {
      throw ParseError(std::string(source_) + ": truncated corpus artifact");
    }
  }

  std::string_view bytes_;
  std::string_view source_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string ComposeText(const Article& a) {
  return JoinTrimmed({a.title, a.abstract, a.journal}, a.id);
}

std::string TitleAbstractText(const Article& a) {
  return JoinTrimmed({a.title, a.abstract}, a.id);
}

std::string SerializeCorpus(const Corpus& corpus) {
  std::string out(kCorpusMagic);
  PutU32(out, kCorpusVersion);
  PutU64(out, corpus.size());
  for (const auto& a : corpus.articles()) {
    for (const std::string* s : {&a.id, &a.title, &a.abstract, &a.journal}) {
      PutU32(out, static_cast<std::uint32_t>(s->size()));
      out += *s;
    }
  }
  return out;
}

Corpus DeserializeCorpus(std::string_view bytes, std::string_view source) {
  if (!bytes.starts_with(kCorpusMagic)) {
    throw ParseError(std::string(source) + ": not a corpus artifact");
  }
  Reader r(bytes.substr(kCorpusMagic.size()), source);
  const auto version = r.Uint(4);
  if (version != kCorpusVersion) {
    throw ParseError(std::string(source) + ": unsupported corpus artifact version " +
                     std::to_string(version));
  }
  const auto count = r.Uint(8);
  std::vector<Article> articles;
  for (std::uint64_t i = 0; i < count; ++i) {
    Article a;
    a.id = r.String();
    a.title = r.String();
    a.abstract = r.String();
    a.journal = r.String();
    articles.push_back(std::move(a));
  }
  if (!r.AtEnd()) {
    throw ParseError(std::string(source) + ": trailing bytes in corpus artifact");
  }
  return Corpus(std::move(articles));
}

void SaveCorpus(const Corpus& corpus, const std::string& path) {
  io::WriteFile(path, SerializeCorpus(corpus));
}

Corpus LoadCorpus(const std::string& path) {
  const std::string bytes = io::ReadFile(path);
  if (std::string_view(bytes).starts_with(kCorpusMagic)) {
    return DeserializeCorpus(bytes, path);
  }
  return IngestMetadata(bytes, MetadataFormat::kNative, path).corpus;
}

}  // namespace covscreen
