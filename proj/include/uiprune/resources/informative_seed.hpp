// Generated by tools/embed_resources.py from data/informative_seed.csv. Do not edit.
#pragma once

#include <string_view>

namespace uiprune::resources {

inline constexpr std::string_view informative_seed = R"res(review_id,label,text
n001,non-informative,The app is nice
n002,non-informative,I hate this app!
n003,non-informative,Love it
n004,non-informative,Great app
n005,non-informative,Best app ever
n006,non-informative,Awesome
n007,non-informative,This app is awesome
n008,non-informative,"Nice app, thanks"
n009,non-informative,I love this app so much
n010,non-informative,Amazing app
n011,non-informative,Wonderful
n012,non-informative,Terrible app
n013,non-informative,Worst app ever
n014,non-informative,I hate it
n015,non-informative,Hate this
n016,non-informative,This is garbage
n017,non-informative,Five stars
n018,non-informative,Good job guys
n019,non-informative,Cool app
n020,non-informative,Very nice
n021,non-informative,"Excellent app, highly recommend"
n022,non-informative,So good
n023,non-informative,Perfect
n024,non-informative,Fantastic work
n025,non-informative,Simply the best
n026,non-informative,Beautiful app
n027,non-informative,Lovely app
n028,non-informative,Just awesome
n029,non-informative,Nice one
n030,non-informative,Really nice app
n031,non-informative,Useless app
n032,non-informative,Awful
n033,non-informative,Boring
n034,non-informative,Meh
n035,non-informative,Rubbish
n036,non-informative,Download now! Visit our site for free coins
n037,non-informative,Check out my channel for great deals
n038,non-informative,Wow wow wow
n039,non-informative,Thank you so much
n040,non-informative,Keep it up
i001,informative,The app crashes every time I open the camera
i002,informative,Please add a dark mode option in settings
i003,informative,The share button does nothing when I tap it
i004,informative,Sync fails after the latest update
i005,informative,Can you add an option to export notes to PDF
i006,informative,The mic button stops listening after two seconds
i007,informative,Notifications arrive late or not at all
i008,informative,The search bar is hidden behind the keyboard
i009,informative,After update the login screen freezes
i010,informative,Battery drains fast when location tracking is on
i011,informative,The widget does not refresh on the home screen
i012,informative,Please bring back the old menu layout
i013,informative,Backup to google drive keeps failing with an error
i014,informative,The font size setting resets after restart
i015,informative,Video playback stutters on my tablet
i016,informative,"I cannot uninstall the update, it keeps asking for permission"
i017,informative,The delete button removed all my files without confirmation
i018,informative,Feature request: allow custom ringtones per contact
i019,informative,The calendar view shows the wrong time zone
i020,informative,Scrolling the list lags with many items
i021,informative,The start button is too small on my phone
i022,informative,Pages load slowly since version two
i023,informative,Dark theme makes the text unreadable in the editor
i024,informative,The download manager stops at ninety percent
i025,informative,Maps do not load offline even after downloading
i026,informative,The toolbar icons overlap on small screens
i027,informative,Contacts import skips entries with special characters
i028,informative,The reminder alarm does not ring when phone is locked
i029,informative,Please let me turn off the sound effects
i030,informative,The app asks for too many permissions like contacts and sms
i031,informative,"Refund please, the premium feature does not unlock"
i032,informative,The back button exits the app instead of going back
i033,informative,Password reset email never arrives
i034,informative,Pictures are uploaded in low resolution
i035,informative,The timer stops when I switch apps
i036,informative,Settings menu crashes when I tap about
i037,informative,Add support for landscape mode on tablets
i038,informative,The rating popup appears every time I open the app
i039,informative,Copy and paste does not work in the note editor
i040,informative,The player skips songs randomly after the update
)res";

}  // namespace uiprune::resources
