"""Classic test substitutions, ready-parsed."""

from .morphism import parse_morphism

FIBONACCI = parse_morphism("a -> a b\nb -> a")
THUE_MORSE = parse_morphism("a -> a b\nb -> b a")
TRIBONACCI = parse_morphism("a -> a b\nb -> a c\nc -> a")
#: sigma(a) = sigma(b): the two letters collapse after one step.
COLLAPSING = parse_morphism("a -> b c\nb -> b c\nc -> a b")
#: fixed point (ab)^infinity: primitive but periodic.
PERIODIC = parse_morphism("a -> a b\nb -> a b")
