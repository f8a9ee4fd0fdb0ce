#pragma once

#include <string>

#include "bang/term.hpp"

namespace bang {

// CbN translation into the bang calculus: x -> x, \x.t -> \x.t, o(..)
// pointwise, (t s) -> t !(s). Accepts plain lambda-terms and one-hole
// contexts (the hole maps to itself). Throws on bang constructors.
TermPtr cbnTranslate(const TermPtr& t);

// CbV translation (the refined embedding): x -> !x, \x.t -> !(\x.t), o(..)
// pointwise, and for applications (t s) -> T s  when t translates to the box
// !T, otherwise (der t) s with der = \x.x. The result of a plain term is
// d-normal.
TermPtr cbvTranslate(const TermPtr& t);

// Context translation; checks the hole count and that the result still has
// exactly one hole.
TermPtr translateContext(const TermPtr& c, Calc mode);

// Membership in the syntactic targets of the translations:
//   CbN image   T ::= x | T !S | \x.T | o(T1..Tk)
//   CbV image   M ::= !U | (der M) N | U M | o(M1..Mn)
//   CbV values  U ::= x | \x.M          (der itself is in neither set)
struct Image {
  bool cbn = false;
  bool cbv = false;
  bool cbvValue = false;

  enum class Tag { CbnImage, CbvImage, CbvValueImage, Outside };
  Tag tag() const {
    if (cbn) return Tag::CbnImage;
    if (cbv) return Tag::CbvImage;
    if (cbvValue) return Tag::CbvValueImage;
    return Tag::Outside;
  }
};
std::string imageTagName(Image::Tag t);
Image inImage(const TermPtr& t);

// Inverse of the CbN translation on its image; throws outside it.
TermPtr cbnInverse(const TermPtr& t);

// Forgetful map: erases the bangs and der-wrappers the CbV translation
// introduces. Left inverse of cbvTranslate; defined only on the CbV image
// grammars and throws outside them.
TermPtr forgetful(const TermPtr& t);

}  // namespace bang
