#pragma once

#include <stdexcept>
#include <string>

namespace trackassoc {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad data fed to the toolkit (CSV rows, mismatched files, ...). CLI exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

// Bad configuration (threshold files, region geometry, scenario settings). CLI exit code 3.
class ConfigError : public Error {
public:
    using Error::Error;
};

class MalformedRow : public InputError {
public:
    MalformedRow(int line_no, const std::string& reason)
        : InputError("line " + std::to_string(line_no) + ": " + reason),
          line_no(line_no),
          reason(reason) {}
    int line_no;
    std::string reason;
};

class OutOfRange : public InputError {
public:
    explicit OutOfRange(const std::string& what) : InputError(what) {}
    OutOfRange(int line_no, const std::string& what)
        : InputError("line " + std::to_string(line_no) + ": " + what), line_no(line_no) {}
    int line_no = -1;
};

class EmptyDataset : public InputError {
public:
    EmptyDataset() : InputError("dataset contains no records") {}
};

class MissingAssignment : public InputError {
public:
    explicit MissingAssignment(int index)
        : InputError("node " + std::to_string(index) + " has no track assignment"), index(index) {}
    int index;
};

class PartitionMismatch : public InputError {
public:
    explicit PartitionMismatch(const std::string& what)
        : InputError("track views do not partition the same node set: " + what) {}
};

class NoOpenTracks : public Error {
public:
    NoOpenTracks() : Error("best_match called with no open tracks") {}
};

class InvalidRegionConfig : public ConfigError {
public:
    explicit InvalidRegionConfig(const std::string& what)
        : ConfigError("invalid region config: " + what) {}
};

class InvalidConfig : public ConfigError {
public:
    explicit InvalidConfig(const std::string& what) : ConfigError(what) {}
};

class GapSwallowsTrack : public ConfigError {
public:
    explicit GapSwallowsTrack(const std::string& track)
        : ConfigError("gap window would erase every node of track " + track) {}
};

}  // namespace trackassoc
