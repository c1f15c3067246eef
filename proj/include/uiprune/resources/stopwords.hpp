// Generated by tools/embed_resources.py from data/stopwords.txt. Do not edit.
#pragma once

#include <string_view>

namespace uiprune::resources {

inline constexpr std::string_view stopwords = R"res(# Default English stop list, one word per line. Lines starting with '-'
# exempt a word from stopping; all other lines add a word.
a
about
above
after
again
against
ain
all
am
an
and
any
are
aren
as
at
be
because
been
before
being
below
between
both
but
by
couldn
d
did
didn
do
does
doesn
doing
don
down
during
each
few
for
from
further
had
hadn
has
hasn
have
haven
having
he
her
here
hers
herself
him
himself
his
how
i
if
in
into
is
isn
it
its
itself
just
ll
m
ma
me
mightn
more
most
mustn
my
myself
needn
nor
now
o
of
off
on
once
only
or
other
our
ours
ourselves
out
over
own
re
s
same
shan
she
should
shouldn
so
some
such
t
than
that
the
their
theirs
them
themselves
then
there
these
they
this
those
through
to
too
under
until
up
ve
very
was
wasn
we
were
weren
what
when
where
which
while
who
whom
why
will
with
won
wouldn
y
you
your
yours
yourself
yourselves
would
could
also
im
ive
-not
-no
-never
-uninstall
-refund
-delete
-remove
)res";

}  // namespace uiprune::resources
