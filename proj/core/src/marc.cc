// Copyright 2026 The alalc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "alalc/marc.h"

#include <expat.h>

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "alalc/error.h"
#include "alalc/unicode.h"

namespace alalc {
namespace {

std::string_view local_name(std::string_view name) {
  const std::size_t colon = name.rfind(':');
  return colon == std::string_view::npos ? name : name.substr(colon + 1);
}

std::string attribute(const XML_Char** attrs, std::string_view key) {
  for (std::size_t i = 0; attrs[i] != nullptr; i += 2) {
    if (local_name(attrs[i]) == key) return attrs[i + 1];
  }
  return {};
}

std::string collapse_spaces(std::string_view text) {
  std::string out;
  bool pending = false;
  for (char32_t c : to_u32(text)) {
    if (is_whitespace(c)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out += ' ';
    pending = false;
    out += to_utf8(c);
  }
  return out;
}

struct Field {
  std::string tag;
  std::string linkage;  // $6
  std::vector<std::pair<char, std::string>> subfields;

  std::string text() const {
    std::string out;
    for (const auto& [code, value] : subfields) {
      if (code >= '0' && code <= '9') continue;
      const std::string v = collapse_spaces(value);
      if (v.empty()) continue;
      if (!out.empty()) out += ' ';
      out += v;
    }
    return nfc(out);
  }
};

struct Linkage {
  std::string tag;
  std::string occurrence;
};

// "245-01/(3/r" -> {245, 01}
std::optional<Linkage> parse_linkage(std::string_view value) {
  if (value.size() < 6 || value[3] != '-') return std::nullopt;
  Linkage link{std::string(value.substr(0, 3)), std::string(value.substr(4, 2))};
  const auto digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits(link.tag) || !digits(link.occurrence)) return std::nullopt;
  return link;
}

class Handler {
 public:
  Handler(const std::string& source, const RecordSink& sink, MarcStats& stats)
      : source_(source), sink_(sink), stats_(stats) {}

  void start(std::string_view name, const XML_Char** attrs) {
    name = local_name(name);
    if (name == "record") {
      in_record_ = true;
      control_.clear();
      fields_.clear();
    } else if (!in_record_) {
      return;
    } else if (name == "controlfield") {
      control_tag_ = attribute(attrs, "tag");
      capture_ = &control_[control_tag_];
      capture_->clear();
    } else if (name == "datafield") {
      fields_.push_back({attribute(attrs, "tag"), {}, {}});
    } else if (name == "subfield" && !fields_.empty()) {
      const std::string code = attribute(attrs, "code");
      fields_.back().subfields.emplace_back(code.empty() ? '?' : code[0], std::string());
      capture_ = &fields_.back().subfields.back().second;
    }
  }

  void end(std::string_view name) {
    name = local_name(name);
    if (name == "controlfield" || name == "subfield") {
      if (name == "subfield" && !fields_.empty() &&
          fields_.back().subfields.back().first == '6') {
        fields_.back().linkage = fields_.back().subfields.back().second;
      }
      capture_ = nullptr;
    } else if (name == "record" && in_record_) {
      in_record_ = false;
      finish_record();
    }
  }

  void text(std::string_view s) {
    if (capture_ != nullptr) capture_->append(s);
  }

 private:
  void finish_record() {
    ++stats_.records_seen;
    auto fixed = control_.find("008");
    if (fixed == control_.end() || fixed->second.size() < 38) {
      ++stats_.records_without_008;
      return;
    }
    BibRecord record;
    auto id = control_.find("001");
    record.record_id = id != control_.end() ? collapse_spaces(id->second) : "";
    if (record.record_id.empty()) {
      record.record_id = std::filesystem::path(source_).stem().string() + "-" +
                         std::to_string(stats_.records_seen);
    }
    for (char& c : record.record_id) {
      if (c == '\t') c = '_';
    }
    record.language_code = fixed->second.substr(35, 3);
    record.source = std::filesystem::path(source_).stem().string();

    std::size_t ordinal = 0;
    for (const Field& field : fields_) {
      if (field.tag != "880") continue;
      ++stats_.fields_880;
      const auto link = parse_linkage(field.linkage);
      const Field* partner = nullptr;
      if (link && link->occurrence != "00") {
        for (const Field& other : fields_) {
          if (other.tag != link->tag) continue;
          const auto back = parse_linkage(other.linkage);
          if (back && back->tag == "880" && back->occurrence == link->occurrence) {
            partner = &other;
            break;
          }
        }
      }
      if (partner == nullptr) {
        ++stats_.unlinked_880;
        continue;
      }
      ++ordinal;
      ++stats_.entries;
      record.entries.push_back(make_entry(record.record_id + "." + std::to_string(ordinal),
                                          record.record_id, link->tag, field.text(),
                                          partner->text()));
    }
    sink_(std::move(record));
  }

  const std::string& source_;
  const RecordSink& sink_;
  MarcStats& stats_;
  bool in_record_ = false;
  std::map<std::string, std::string> control_;
  std::string control_tag_;
  std::vector<Field> fields_;
  std::string* capture_ = nullptr;
};

void XMLCALL on_start(void* data, const XML_Char* name, const XML_Char** attrs) {
  static_cast<Handler*>(data)->start(name, attrs);
}
void XMLCALL on_end(void* data, const XML_Char* name) {
  static_cast<Handler*>(data)->end(name);
}
void XMLCALL on_text(void* data, const XML_Char* s, int len) {
  static_cast<Handler*>(data)->text(std::string_view(s, static_cast<std::size_t>(len)));
}

struct ParserDeleter {
  void operator()(XML_ParserStruct* p) const { XML_ParserFree(p); }
};

}  // namespace

void MarcStats::merge(const MarcStats& other) {
  records_seen += other.records_seen;
  records_without_008 += other.records_without_008;
  fields_880 += other.fields_880;
  unlinked_880 += other.unlinked_880;
  entries += other.entries;
}

void parse_marc(std::istream& in, const std::string& source,
                const RecordSink& sink, MarcStats* stats) {
  MarcStats local;
  Handler handler(source, sink, stats != nullptr ? *stats : local);
  std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(XML_ParserCreate("UTF-8"));
  if (!parser) throw Error("xml", "cannot create XML parser");
  XML_SetUserData(parser.get(), &handler);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  XML_SetCharacterDataHandler(parser.get(), on_text);

  std::vector<char> buffer(1 << 16);
  while (true) {
    in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    const auto got = static_cast<int>(in.gcount());
    const bool done = got == 0 || in.eof();
    if (XML_Parse(parser.get(), buffer.data(), got, done) == XML_STATUS_ERROR) {
      throw XmlError(source,
                     static_cast<std::size_t>(XML_GetCurrentByteIndex(parser.get())),
                     XML_ErrorString(XML_GetErrorCode(parser.get())));
    }
    if (done) break;
  }
}

std::vector<BibRecord> parse_marc(std::istream& in, const std::string& source,
                                  MarcStats* stats) {
  std::vector<BibRecord> records;
  parse_marc(in, source, [&](BibRecord&& r) { records.push_back(std::move(r)); }, stats);
  return records;
}

std::vector<BibRecord> parse_marc(std::string_view xml, const std::string& source,
                                  MarcStats* stats) {
  std::istringstream in{std::string(xml)};
  return parse_marc(in, source, stats);
}

std::vector<BibRecord> parse_marc_file(const std::filesystem::path& path,
                                       MarcStats* stats) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_marc(in, path.string(), stats);
}

std::vector<BibRecord> select_language(std::vector<BibRecord> records,
                                       std::string_view code) {
  std::erase_if(records, [&](const BibRecord& r) { return r.language_code != code; });
  return records;
}

}  // namespace alalc
