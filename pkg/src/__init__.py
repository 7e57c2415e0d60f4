# Bibliothek für Funktionen auf endlichen Mengen: Wertetabellen, Zhegalkin-Polynome,
# Stelligkeitslücke, Generatoren und Prüfläufe.
