#pragma once

#include <cstring>
#include <iostream>
#include <istream>
#include <string>

#include <zlib.h>

#include "tmc/core.hpp"
#include "tmc/temporal_graph.hpp"

namespace tmc {

// Line reader over a plain istream, a file path or a .gz file. zlib's gz layer
// reads uncompressed files unchanged, so every path goes through it; "-" means
// stdin (plain text only).
class LineSource {
 public:
  explicit LineSource(std::istream& in) : in_(&in) {}

  explicit LineSource(const std::string& path) {
    if (path == "-") {
      in_ = &std::cin;
      return;
    }
    gz_ = gzopen(path.c_str(), "rb");
    if (!gz_) throw ParseError("cannot open '" + path + "'");
    gzbuffer(gz_, 1 << 16);
  }

  LineSource(const LineSource&) = delete;
  LineSource& operator=(const LineSource&) = delete;

  ~LineSource() {
    if (gz_) gzclose(gz_);
  }

  bool next(std::string& line) {
    if (in_) return static_cast<bool>(std::getline(*in_, line));
    line.clear();
    char buf[4096];
    for (;;) {
      if (!gzgets(gz_, buf, sizeof(buf))) {
        int err = 0;
        const char* msg = gzerror(gz_, &err);
        if (err != Z_OK && err != Z_STREAM_END) {
          throw ParseError(std::string("gzip read error: ") + (msg ? msg : ""));
        }
        return !line.empty();
      }
      std::size_t len = std::strlen(buf);
      if (len && buf[len - 1] == '\n') {
        line.append(buf, len - 1);
        return true;
      }
      line.append(buf, len);
      if (len + 1 < sizeof(buf)) return true;  // EOF without trailing newline
    }
  }

 private:
  std::istream* in_ = nullptr;
  gzFile gz_ = nullptr;
};

inline TemporalGraph load_edge_list(const std::string& path) {
  LineSource src(path);
  EdgeRecordScanner scanner;
  NameMap names;
  std::vector<std::string> order;
  std::vector<TemporalGraph::RawEdge> raw;
  std::string line;
  EdgeRecordScanner::Record rec;
  while (src.next(line)) {
    if (!scanner.scan(line, rec)) continue;
    VertexId u = densify(names, order, rec.src);
    VertexId v = densify(names, order, rec.dst);
    raw.push_back({u, v, rec.t});
  }
  return TemporalGraph::build(std::move(raw), std::move(order));
}

}  // namespace tmc
