#pragma once

#include <stdexcept>
#include <string>

namespace stegcrypt {

// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (zero modulus, mismatched
// raster dimensions, bad key sizes, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// mod_inverse called with gcd(a, m) != 1.
class NotInvertibleError : public Error {
public:
    using Error::Error;
};

// Plaintext or ciphertext block not below the modulus.
class BlockTooLargeError : public Error {
public:
    using Error::Error;
};

// Modulus too small to hold even a single plaintext byte.
class KeyTooSmallError : public Error {
public:
    using Error::Error;
};

// Decryption produced a byte stream that cannot be un-padded, or the
// ciphertext block sequence itself is malformed.
class CorruptCiphertextError : public Error {
public:
    using Error::Error;
};

// Payload does not fit in the cover image.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Delimited embedding rejected a text that contains the delimiter.
class DelimiterCollisionError : public Error {
public:
    using Error::Error;
};

// Delimited extraction scanned the whole image without finding the delimiter.
class NoMessageError : public Error {
public:
    using Error::Error;
};

// Framed extraction found a length header that exceeds the image capacity.
class CorruptFrameError : public Error {
public:
    using Error::Error;
};

// Extracted bytes do not start with the envelope magic.
class NotAStegoEnvelopeError : public Error {
public:
    using Error::Error;
};

// Envelope cipher id does not match the kind of key supplied.
class WrongKeyKindError : public Error {
public:
    using Error::Error;
};

// Image file is not a lossless format this library accepts.
class UnsupportedFormatError : public Error {
public:
    using Error::Error;
};

// Image file claims to be PNG but cannot be decoded.
class DecodeError : public Error {
public:
    using Error::Error;
};

// Malformed key file, envelope, or other structured input.
class ParseError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace stegcrypt
