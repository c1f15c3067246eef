# Regenerates fixtures/miniapp. The output is committed; rerun only after editing this file.
import json, os, shutil
root = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures", "miniapp")
shutil.rmtree(root, ignore_errors=True)
os.makedirs(root)
app = "com.example.voicenote"
releases = [("1.0", "2024-01-01T00:00:00Z"), ("1.1", "2024-03-01T00:00:00Z"), ("1.2", "2024-05-01T00:00:00Z")]
with open(f"{root}/releases.txt", "w") as f:
    f.write("# version timestamp\n")
    for v, t in releases:
        f.write(f"{v} {t}\n")

strings = {
    "app_name": "Voice Notes", "start_listening": "Start Listening", "note_hint": "Type a note",
    "save": "Save", "share_note": "Share Note", "share_icon": "Share", "cloud_sync": "Cloud Sync",
    "auto_backup": "Auto Backup", "dark_mode": "Dark Mode", "shake_undo": "Shake to Undo",
    "help": "Gesture Help", "title": "My Notes",
}
def layout(body):
    return ('<?xml version="1.0" encoding="utf-8"?>\n'
            '<LinearLayout xmlns:android="http://schemas.android.com/apk/res/android"\n'
            '    android:layout_width="match_parent" android:layout_height="match_parent">\n'
            + body + '</LinearLayout>\n')
W = {
    "title": '    <TextView android:id="@+id/tv_title" android:text="@string/title"/>\n',
    "mic": '    <Button android:id="@+id/btn_mic" android:text="@string/start_listening"/>\n',
    "note": '    <EditText android:id="@+id/edit_note" android:hint="@string/note_hint"/>\n',
    "save": '    <Button android:id="@+id/btn_save" android:text="@string/save"/>\n',
    "share": '    <Button android:id="@+id/share_note" android:text="@string/share_note"/>\n',
    "share_icon": '    <ImageButton android:id="@+id/ib_share" android:src="@drawable/ic_share"/>\n',
    "sync": '    <Button android:id="@+id/cloud_sync" android:text="@string/cloud_sync"/>\n',
    "backup": '    <Switch android:id="@+id/auto_backup" android:text="@string/auto_backup"/>\n',
    "dark": '    <Switch android:id="@+id/sw_dark_mode" android:text="@string/dark_mode"/>\n',
    "shake": '    <Button android:id="@+id/shake_undo" android:text="@string/shake_undo"/>\n',
    "help": '    <TextView android:id="@+id/tv_help" android:text="@string/help"/>\n',
}
files = {
    "1.0": {"activity_main": ["title", "mic"], "note_editor": ["note", "save"], "share_sheet": ["share", "share_icon"],
            "settings": ["sync", "dark"], "gestures": ["help"]},
    "1.1": {"activity_main": ["title", "mic"], "note_editor": ["note", "save"], "share_sheet": ["share", "share_icon"],
            "settings": ["backup", "dark"], "gestures": ["help", "shake"]},
    "1.2": {"activity_main": ["title", "mic"], "note_editor": ["note", "save"], "share_sheet": ["share", "share_icon"],
            "settings": ["dark"], "gestures": ["help", "shake"]},
}
elem_ids = {}
for v, fl in files.items():
    d = f"{root}/layouts/{v}/res"
    os.makedirs(f"{d}/layout"); os.makedirs(f"{d}/values")
    with open(f"{d}/values/strings.xml", "w") as f:
        f.write('<?xml version="1.0" encoding="utf-8"?>\n<resources>\n')
        for k, s in strings.items():
            f.write(f'    <string name="{k}">{s}</string>\n')
        f.write('</resources>\n')
    ids = []
    for name, ws in fl.items():
        with open(f"{d}/layout/{name}.xml", "w") as f:
            f.write(layout("".join(W[w] for w in ws)))
        for w in ws:
            ids.append(W[w].split('@+id/')[1].split('"')[0])
    elem_ids[v] = ids

reviews = {
 0: [
  ("Cloud sync button lost my notes, cloud sync is awful. Uninstall.", 1),
  ("Cloud sync is broken, the cloud sync button is useless. Refund.", 1),
  ("Sync button fails, cloud sync is awful. Uninstalled.", 1),
  ("The cloud sync button deleted my notes. Cloud sync, uninstalling.", 1),
  ("Cloud sync crashes, terrible sync button.", 1),
  ("Cloud sync button broken again, cloud sync must go. Uninstall.", 2),
  ("Awful cloud sync, the cloud sync lost my data. Refund.", 1),
  ("The mic button to start listening is great, start listening works.", 5),
  ("Start listening with the mic is quick.", 5),
  ("Mic button starts listening instantly.", 4),
  ("Start listening mic button works well.", 5),
  ("The mic start listening button is reliable.", 4),
  ("Start listening on the mic button is smooth.", 5),
  ("Share note button is handy.", 5),
  ("Sharing a note with the share button is easy.", 4),
  ("Share note button works perfectly for sharing notes.", 5),
  ("The share note button is convenient.", 4),
  ("Share button shares the note nicely.", 5),
  ("Love it!", 5),
  ("Great app", 5),
 ],
 1: [
  ("Auto backup switch drains the battery, awful auto backup. Uninstalling.", 1),
  ("The auto backup switch is broken, backup lost my notes.", 1),
  ("Auto backup keeps failing, horrible auto backup switch. Refund.", 1),
  ("Backup switch turns itself on, auto backup is terrible. Uninstalled.", 1),
  ("Auto backup switch crashes. Useless backup.", 1),
  ("Auto backup filled my storage, bad auto backup switch. Uninstall.", 2),
  ("Horrible auto backup switch, backup corrupts notes.", 1),
  ("Shake to undo button is handy.", 5),
  ("Shake to undo is a clever button.", 4),
  ("The shake undo button works well.", 5),
  ("Shake undo button saved my text.", 5),
  ("Shake to undo button is useful.", 4),
  ("The mic button to start listening is great, start listening works.", 5),
  ("Start listening mic is accurate.", 5),
  ("Mic start listening button is good.", 4),
  ("Start listening on the mic button is quick.", 5),
  ("Share note button works well.", 5),
  ("Share button shares the note easily.", 4),
  ("Best app ever", 5),
  ("Amazing!!!", 5),
 ],
 2: [
  ("Shake to undo button triggers constantly, shake undo is awful. Uninstalling.", 1),
  ("Shake undo erased my text, terrible shake undo button. Uninstall.", 1),
  ("The shake to undo button is horrible, hate shake undo. Uninstalled.", 1),
  ("Shake undo button keeps firing, useless shake undo. I want a refund.", 1),
  ("Shake to undo is broken and the shake undo button is awful. Uninstalling now.", 1),
  ("Shake undo button ruined my notes, shake undo is bad. Uninstall.", 1),
  ("Terrible shake undo button, shake undo lost my text. Refund.", 1),
  ("Awful shake to undo button, shake undo fires in my pocket. Uninstalled.", 1),
  ("Share note button is great.", 5),
  ("Sharing a note with the share note button is easy.", 5),
  ("Share note button works perfectly for sharing notes.", 5),
  ("The share note button is very handy.", 4),
  ("Share button shares the note quickly.", 5),
  ("Love the share note button.", 5),
  ("The mic button to start listening is great, start listening works.", 5),
  ("Start listening on the mic is accurate.", 4),
  ("Mic button start listening is reliable.", 5),
  ("Start listening with the mic button is smooth.", 4),
  ("Nice app", 5),
  ("So good!", 5),
 ],
}
days = {0: "2024-01", 1: "2024-03", 2: "2024-05"}
with open(f"{root}/reviews.jsonl", "w") as f:
    n = 0
    for w in range(3):
        for i, (text, rating) in enumerate(reviews[w]):
            n += 1
            ts = f"{days[w]}-{i + 3:02d}T{(i * 7) % 24:02d}:15:00Z"
            f.write(json.dumps({"id": f"r{n:03d}", "text": text, "rating": rating, "timestamp": ts}) + "\n")

deleted = {(0, "cloud_sync"), (1, "auto_backup"), (2, "shake_undo")}
with open(f"{root}/labels.csv", "w") as f:
    f.write("app_id,element_id,release_ordinal,deleted\n")
    for o, (v, _) in enumerate(releases):
        for e in elem_ids[v]:
            f.write(f"{app},{e},{o},{1 if (o, e) in deleted else 0}\n")

cfg = {"app_id": app, "reviews": "reviews.jsonl", "releases": "releases.txt", "layouts_root": "layouts",
       "labels": "labels.csv", "seed": 20240501, "link_threshold": 0.65, "tau_topic": 0.25,
       "hdp": {"iterations": 200, "burn_in": 100}, "forest": {"n_trees": 50}, "output": "out"}
with open(f"{root}/config.json", "w") as f:
    json.dump(cfg, f, indent=2); f.write("\n")
