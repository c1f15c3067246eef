// Generated by tools/embed_resources.py from data/contractions.csv. Do not edit.
#pragma once

#include <string_view>

namespace uiprune::resources {

inline constexpr std::string_view contractions = R"res(contraction,expansion
ain't,am not
aren't,are not
can't,can not
can't've,can not have
could've,could have
couldn't,could not
couldn't've,could not have
didn't,did not
doesn't,does not
don't,do not
hadn't,had not
hadn't've,had not have
hasn't,has not
haven't,have not
he'd,he would
he'd've,he would have
he'll,he will
he's,he is
how'd,how did
how'll,how will
how's,how is
i'd,i would
i'd've,i would have
i'll,i will
i'll've,i will have
i'm,i am
i've,i have
isn't,is not
it'd,it would
it'd've,it would have
it'll,it will
it's,it is
let's,let us
ma'am,madam
mayn't,may not
might've,might have
mightn't,might not
must've,must have
mustn't,must not
needn't,need not
o'clock,of the clock
oughtn't,ought not
shan't,shall not
she'd,she would
she'd've,she would have
she'll,she will
she's,she is
should've,should have
shouldn't,should not
shouldn't've,should not have
so've,so have
so's,so is
that'd,that would
that'll,that will
that's,that is
there'd,there would
there'll,there will
there's,there is
there've,there have
they'd,they would
they'd've,they would have
they'll,they will
they're,they are
they've,they have
this's,this is
wasn't,was not
we'd,we would
we'd've,we would have
we'll,we will
we're,we are
we've,we have
weren't,were not
what'd,what did
what'll,what will
what're,what are
what's,what is
what've,what have
when's,when is
when'd,when did
where'd,where did
where's,where is
where've,where have
who'd,who would
who'll,who will
who're,who are
who's,who is
who've,who have
why'd,why did
why's,why is
why've,why have
will've,will have
won't,will not
won't've,will not have
would've,would have
wouldn't,would not
wouldn't've,would not have
y'all,you all
y'all'd,you all would
y'all're,you all are
y'all've,you all have
you'd,you would
you'd've,you would have
you'll,you will
you'll've,you will have
you're,you are
you've,you have
here's,here is
here're,here are
it've,it have
nothin',nothing
somethin',something
c'mon,come on
'cause,because
ne'er,never
e'er,ever
'tis,it is
'twas,it was
d'you,do you
how're,how are
how've,how have
that've,that have
there're,there are
which's,which is
who'd've,who would have
daren't,dare not
didn't've,did not have
mightn't've,might not have
mustn't've,must not have
needn't've,need not have
)res";

}  // namespace uiprune::resources
