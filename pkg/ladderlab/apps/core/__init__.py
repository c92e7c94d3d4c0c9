# Ladder transform lab app
