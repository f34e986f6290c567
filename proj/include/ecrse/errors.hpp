#ifndef ECRSE_ERRORS_HPP
#define ECRSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ecrse {

// Base class for everything this library throws on its own behalf.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// bigmath
struct ZeroModulus : Error {
    ZeroModulus() : Error("modulus must be at least 2") {}
};
struct NotCoprime : Error {
    NotCoprime() : Error("values are not coprime, inverse does not exist") {}
};
struct EvenModulus : Error {
    EvenModulus() : Error("modulus must be an odd prime") {}
};
struct NonResidue : Error {
    NonResidue() : Error("value is a quadratic nonresidue") {}
};

// ec_group
struct NotOnCurve : Error {
    NotOnCurve() : Error("point does not satisfy the curve equation") {}
};
struct CurveTooLarge : Error {
    CurveTooLarge() : Error("field too large for exhaustive enumeration") {}
};
struct PointAtInfinity : Error {
    PointAtInfinity() : Error("operation undefined for the point at infinity") {}
};

// embedding / protocols
struct MessageTooLarge : Error {
    MessageTooLarge() : Error("message exceeds the embedding modulus") {}
};
struct ModulusTooLarge : Error {
    ModulusTooLarge() : Error("embedding modulus must be smaller than the field prime") {}
};
struct DegenerateMessage : Error {
    DegenerateMessage() : Error("messages 0 and 1 are fixed points of the power map") {}
};
struct NoEmbeddingFound : Error {
    NoEmbeddingFound() : Error("no curve point found within the attempt budget") {}
};
struct XOutOfRange : Error {
    XOutOfRange() : Error("x-coordinate not below the embedding modulus") {}
};
struct NoSuitableModulus : Error {
    NoSuitableModulus() : Error("no semiprime modulus found in the requested range") {}
};
struct ScalarOutOfRange : Error {
    ScalarOutOfRange() : Error("scalar outside the open interval (1, order)") {}
};
struct RandomnessExhausted : Error {
    RandomnessExhausted() : Error("prime search budget exceeded") {}
};
struct CiphertextTooLarge : Error {
    CiphertextTooLarge() : Error("ciphertext exceeds the modulus") {}
};

// codec
struct BoundTooSmall : Error {
    BoundTooSmall() : Error("block bound too small to hold one byte plus offset") {}
};
struct MalformedBlock : Error {
    MalformedBlock() : Error("block value inconsistent with its byte length") {}
};
struct InvalidUtf8 : Error {
    InvalidUtf8() : Error("reassembled bytes are not valid UTF-8") {}
};

// file formats / cli
struct MalformedInput : Error {
    explicit MalformedInput(const std::string& what) : Error(what) {}
};

}  // namespace ecrse

#endif
