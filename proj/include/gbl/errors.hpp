#pragma once
#include <stdexcept>
#include <string>

namespace gbl {

// Unreadable / unwritable files.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Syntactically or semantically broken input data. `line` is 1-based
// when the source is a line-oriented file, 0 otherwise.
struct data_error : std::runtime_error {
    long line;
    explicit data_error(const std::string& what, long line_no = 0)
        : std::runtime_error(what), line(line_no) {}
};

} // namespace gbl
