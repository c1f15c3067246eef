// Generated by tools/embed_resources.py from data/table2_rows.csv. Do not edit.
#pragma once

#include <string_view>

namespace uiprune::resources {

inline constexpr std::string_view table2_rows = R"res(row,app,fp,fn,tp,tn,printed_f1
A1,app.openconnect,0,2,1,232,0.5
A2,com.google.android.stardroid,0,2,18,1583,0.95
A3,com.moez.QKSMS,0,11,5,2993,0.48
A4,com.vuze.android.remote,0,2,8,764,0.89
A5,net.nurik.roman.muzei,0,15,36,1037,0.83
A6,org.androisof.app.permission,0,1,2,186,0.8
A7,org.connectbot,0,6,8,457,0.73
A8,org.dmfs.tasks,0,7,7,848,0.67
A9,org.evilssoft.pathfinder.reference,0,0,2,650,1
A10,org.isoron.uhabits,3,31,101,760,0.86
A11,com.spazedog.mounts2sd,3,7,60,324,0.92
A12,org.telegram.messenger,2,30,26,782,0.62
A13,in.blogspot.anselbros.torchie,8,12,72,42,0.88
A14,com.emaguy.cleanstatusbar,1,7,8,70,0.67
A15,com.boardgamegeek,33,224,191,6682,0.6
A16,com.gelakinetiic.mtgfam,1,3,4,4502,0.67
A17,org.addhen.smssync,6,0,22,207,0.88
A18,com.amaze.filemanager,7,12,25,576,0.72
A19,com.gh4a,4,8,14,318,0.7
A20,org.kontalk,2,2,7,43,0.78
A21,org.transdroid.lite,2,3,7,930,0.74
A22,de.qspool.clementineremote,4,9,13,418,0.67
A23,com.daiancorp.mh4udatabase,29,51,73,2948,0.65
A24,org.servalproject,4,14,10,519,0.53
A25,org.wikipedia,23,0,94,17713,0.89
)res";

}  // namespace uiprune::resources
